#include "qloop/verify.hpp"

#include "qloop/series.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace qloop {

namespace {

using Vec = std::map<int, Rat>;

Vec col_apply(const Mat& M, const Vec& x) {
  Vec out;
  for (const auto& [rc, val] : M.e) {
    auto it = x.find(rc.second);
    if (it == x.end()) continue;
    Rat t = val * it->second;
    if (t.is_zero()) continue;
    auto [jt, fresh] = out.try_emplace(rc.first, t);
    if (!fresh) {
      jt->second += t;
      if (jt->second.is_zero()) out.erase(jt);
    }
  }
  return out;
}

Vec row_apply(const Vec& x, const Mat& M) {
  Vec out;
  for (const auto& [rc, val] : M.e) {
    auto it = x.find(rc.first);
    if (it == x.end()) continue;
    Rat t = it->second * val;
    if (t.is_zero()) continue;
    auto [jt, fresh] = out.try_emplace(rc.second, t);
    if (!fresh) {
      jt->second += t;
      if (jt->second.is_zero()) out.erase(jt);
    }
  }
  return out;
}

// a*sa == b*sb entrywise, gcd-free (Rat::operator== cross-multiplies).
bool vec_eq_scaled(const Vec& a, const Rat& sa, const Vec& b, const Rat& sb) {
  for (const auto& [k, v] : a) {
    Rat lhs = v * sa;
    auto it = b.find(k);
    if (it == b.end()) {
      if (!lhs.is_zero()) return false;
    } else if (!(lhs == it->second * sb)) {
      return false;
    }
  }
  for (const auto& [k, v] : b)
    if (a.find(k) == a.end() && !(v * sb).is_zero()) return false;
  return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
  return vec_eq_scaled(a, Rat::from_int(1), b, Rat::from_int(1));
}

long comp_idx(int N, std::initializer_list<int> digits) {
  long r = 0;
  for (int d : digits) r = r * N + d;
  return r;
}

// One evaluation context: symbolic leaves all variables free; sampled bakes
// u, v, w into the construction and substitutes the s value afterwards.
struct Ctx {
  const AlgebraSpec& sp;
  bool symbolic;
  Rat s, u, v, w;
  std::map<int, Rat> sm;  // {VAR_S: s} in sampled mode

  Ctx(const AlgebraSpec& spec, bool symb, Rat sv, Rat uv, Rat vv, Rat wv)
      : sp(spec), symbolic(symb), s(std::move(sv)), u(std::move(uv)), v(std::move(vv)),
        w(std::move(wv)) {
    if (!symbolic) sm = {{VAR_S, s}};
  }

  Rat sub(const Rat& r) const { return symbolic ? r : rat_subst(r, sm); }
  Mat sub(const Mat& m) const { return symbolic ? m : mat_subst(m, sm); }

  Mat R(const Rat& x, const Rat& y, const Mut& mut = {}) const {
    return sub(build_R(sp, x, y, mut));
  }
  Rat f(const Rat& x, const Rat& y) const { return sub(fgg(x, y).f); }
  Rat xi() const { return sub(xival(sp)); }
  Rat q(int k = 1) const { return sub(qpow_r(k)); }

  std::string point() const {
    if (symbolic) return "symbolic";
    return "s=" + s.str() + " u=" + u.str() + " v=" + v.str() + " w=" + w.str();
  }
};

// cfac * R(x,y) with every entry polynomial (integer denominators at most):
// the u-v pole, the tail pole, and the residual s-monomials are all cleared.
// Both sides of an identity then balance by carrying the cfac scalars.
Mat cleared_R(const Ctx& c, const Rat& x, const Rat& y, Rat* cfac, const Mut& mut = {}) {
  Mat R = c.R(x, y, mut);
  Rat c0 = x - y;
  if (c.sp.fam != Family::A1) {
    Rat xim = c.xi();
    if (mut.xi_q2) xim = xim * c.q(2);
    c0 = c0 * (x - y * xim);
  }
  Mat S(R.rows, R.cols);
  int smax = 0;
  for (const auto& [rc, val] : R.e) {
    Rat e = val * c0;
    const Poly& d = e.den();
    assert(d.t.size() == 1);
    for (int vi = 0; vi < NV; ++vi) assert(vi == VAR_S || d.t[0].e[static_cast<size_t>(vi)] == 0);
    smax = std::max(smax, static_cast<int>(d.t[0].e[VAR_S]));
    S.set(rc.first, rc.second, e);
  }
  if (smax > 0) {
    Rat sm = c.sub(Rat::var(VAR_S, smax));
    for (auto& [rc, val] : S.e) val = val * sm;
    c0 = c0 * sm;
  }
  if (cfac) *cfac = c0;
  return S;
}

std::string diff_witness(const Mat& got, const Mat& want, const Ctx& ctx) {
  Mat d = got - want;
  if (d.is_zero()) return "";
  const auto& [rc, val] = *d.e.begin();
  std::ostringstream os;
  os << ctx.point() << "; entry (" << rc.first << "," << rc.second
     << ") differs by " << val.str();
  return os.str();
}

// got*sg == want*sw entrywise without forming differences (no gcd work).
std::string diff_scaled(const Mat& got, const Rat& sg, const Mat& want, const Rat& sw,
                        const Ctx& ctx) {
  auto describe = [&](int r, int cc) {
    std::ostringstream os;
    os << ctx.point() << "; entry (" << r << "," << cc << ") differs";
    return os.str();
  };
  for (const auto& [rc, val] : got.e) {
    Rat lhs = val * sg;
    auto it = want.e.find(rc);
    if (it == want.e.end()) {
      if (!lhs.is_zero()) return describe(rc.first, rc.second);
    } else if (!(lhs == it->second * sw)) {
      return describe(rc.first, rc.second);
    }
  }
  for (const auto& [rc, val] : want.e)
    if (got.e.find(rc) == got.e.end() && !(val * sw).is_zero())
      return describe(rc.first, rc.second);
  return "";
}

// ---- individual properties -------------------------------------------------

bool c_ybe(const Ctx& c, const Mut& mut, std::string& cex) {
  const int N = c.sp.N;
  Mat R12 = embed_pair(cleared_R(c, c.u, c.v, nullptr, mut), N, 3, 0, 1);
  Mat R13 = embed_pair(cleared_R(c, c.u, c.w, nullptr, mut), N, 3, 0, 2);
  Mat R23 = embed_pair(cleared_R(c, c.v, c.w, nullptr, mut), N, 3, 1, 2);
  Mat L = R12 * R13 * R23;
  Mat Rhs = R23 * R13 * R12;
  cex = diff_witness(L, Rhs, c);
  return cex.empty();
}

bool c_unitarity(const Ctx& c, const Mut& mut, std::string& cex) {
  const int N = c.sp.N;
  Mat P = flip_op(N);
  Rat c12, c21;
  Mat R12 = cleared_R(c, c.u, c.v, &c12, mut);
  Mat R21 = P * cleared_R(c, c.v, c.u, &c21, mut) * P;
  Rat sc;
  Rat want = c12 * c21 * c.f(c.u, c.v) * c.f(c.v, c.u);
  if (is_scalar_mat(R12 * R21, &sc) && sc == want) return true;
  cex = c.point() + "; R12*R21 is not f(u,v)f(v,u)*I";
  return false;
}

bool c_crossing(const Ctx& c, const Mut& mut, std::string& cex) {
  const int N = c.sp.N;
  Mat P = flip_op(N);
  Rat xi = c.xi();
  Rat sc;
  if (c.sp.fam == Family::A1) {
    Rat ca, cb;
    Mat lhs = c.sub(conj_bar1(
                  transpose_t(cleared_R(c, c.v * xi * xi, c.u, &ca, mut), c.sp, 1, mut.t_noeps),
                  c.sp, 2)) *
              transpose_t(P * cleared_R(c, c.u, c.v, &cb, mut) * P, c.sp, 1, mut.t_noeps);
    if (is_scalar_mat(lhs, &sc) && sc == ca * cb) return true;
  } else {
    Rat ca, cb;
    Mat lhs = c.sub(conj_bar1(
                  transpose_t(cleared_R(c, c.v * xi, c.u, &ca, mut), c.sp, 1, mut.t_noeps),
                  c.sp, 1)) *
              cleared_R(c, c.v, c.u, &cb, mut);
    Rat want = ca * cb * c.f(c.u, c.v) * c.f(c.v, c.u);
    if (is_scalar_mat(lhs, &sc) && sc == want) return true;
  }
  cex = c.point() + "; crossing product not the expected scalar";
  return false;
}

bool c_cross_doubled(const Ctx& c, const Mut& mut, std::string& cex) {
  const int N = c.sp.N;
  Mat P = flip_op(N);
  Rat xi = c.xi();
  Rat ca, cb;
  Mat R21uv = P * cleared_R(c, c.u, c.v, &cb, mut) * P;
  Mat lhs = c.sub(conj_bar1(
                transpose_t(cleared_R(c, c.v * xi * xi, c.u, &ca, mut), c.sp, 1, mut.t_noeps),
                c.sp, 2)) *
            transpose_t(R21uv, c.sp, 1, mut.t_noeps);
  Rat want = ca * cb * c.f(c.u, c.v * xi) * c.f(c.v * xi, c.u);
  Rat sc;
  if (is_scalar_mat(lhs, &sc) && sc == want) return true;
  cex = c.point() + "; doubled crossing product not f(u,v xi) f(v xi,u)*I";
  return false;
}

bool c_twist(const Ctx& c, const Mut& mut, std::string& cex) {
  Mat R12 = cleared_R(c, c.u, c.v, nullptr, mut);
  Mat DD = c.sub(twist_diag(c.sp));
  cex = diff_scaled(R12 * DD, Rat::from_int(1), DD * R12, Rat::from_int(1), c);
  return cex.empty();
}

bool c_reflec(const Ctx& c, const Mut& mut, std::string& cex) {
  Mat R12 = cleared_R(c, c.u, c.v, nullptr, mut);
  Mat t = transpose_t(transpose_t(R12, c.sp, 1, mut.t_noeps), c.sp, 2, mut.t_noeps);
  cex = diff_witness(t, R12, c);
  return cex.empty();
}

bool c_scaling_inv(const Ctx& c, std::string& cex) {
  Rat beta = Rat::var(VAR_W);
  Rat c1, c2;
  Mat lhs = cleared_R(c, beta * c.u, beta * c.v, &c1);
  Mat rhs = cleared_R(c, c.u, c.v, &c2);
  cex = diff_scaled(lhs, c2, rhs, c1, c);
  return cex.empty();
}

// ---- pole structure ----------------------------------------------------------

Mat R_symbolic_u(const Ctx& c) {
  // u kept symbolic regardless of mode (residues need it).
  Mat m = build_R(c.sp, Rat::var(VAR_U), c.v);
  return c.sub(m);
}

bool c_pole_v(const Ctx& c, std::string& cex) {
  const int N = c.sp.N;
  Rat uvar = Rat::var(VAR_U);
  Rat pref = (uvar - c.v) * (uvar * (c.q(1) - c.q(-1))).inv();
  Mat Rm = R_symbolic_u(c);
  Mat res(N * N, N * N);
  const std::map<int, Rat> at = {{VAR_U, c.v}};
  for (const auto& [rc, val] : Rm.e) res.set(rc.first, rc.second, rat_subst(pref * val, at));
  Mat want = flip_op(N);
  if (c.sp.fam != Family::A1 && c.sp.xi_sign == 1 && c.sp.xi_qpow == 0) {
    // xi = 1: the tail pole sits at u = v too, so its residue joins in
    // (opposite sign, since this prefactor is the negative of the tail one).
    want = want - c.sub(conj_bar1(transpose_t(flip_op(N), c.sp, 1), c.sp, -1));
  }
  cex = diff_witness(res, want, c);
  return cex.empty();
}

bool c_pole_vxi(const Ctx& c, std::string& cex) {
  const int N = c.sp.N;
  Rat uvar = Rat::var(VAR_U);
  Rat xi = c.xi();
  Rat pref = (c.v * xi - uvar) * (uvar * (c.q(1) - c.q(-1))).inv();
  Mat Rm = R_symbolic_u(c);
  Mat res(N * N, N * N);
  const std::map<int, Rat> at = {{VAR_U, c.v * xi}};
  for (const auto& [rc, val] : Rm.e) res.set(rc.first, rc.second, rat_subst(pref * val, at));
  Mat want = c.sub(conj_bar1(transpose_t(flip_op(N), c.sp, 1), c.sp, -1));
  cex = diff_witness(res, want, c);
  return cex.empty();
}

bool c_cen2(const Ctx& c, std::string& cex) {
  const int N = c.sp.N;
  Rat uvar = Rat::var(VAR_U);
  Rat xi = c.xi();
  Mat Rt1inv = inverse(transpose_t(R_symbolic_u(c), c.sp, 1));
  Rat pref = (c.v * xi * xi - uvar) * (uvar * (c.q(1) - c.q(-1))).inv();
  Rat xfac = c.sub(fgg(uvar * xi, c.v * xi * xi).f) * c.sub(fgg(c.v * xi * xi, uvar * xi).f);
  Mat res(N * N, N * N);
  const std::map<int, Rat> at = {{VAR_U, c.v * xi * xi}};
  for (const auto& [rc, val] : Rt1inv.e)
    res.set(rc.first, rc.second, rat_subst(pref * xfac * val, at));
  Mat want = c.sub(conj_bar1(transpose_t(flip_op(N), c.sp, 1), c.sp, -2));
  cex = diff_witness(res, want, c);
  return cex.empty();
}

bool c_qerp(const Ctx& c, std::string& cex) {
  const int N = c.sp.N;
  Rat xi = c.xi();
  Mat PP = c.sub(build_Ppart(c.sp, c.v * xi, c.u));
  Mat P = flip_op(N);
  Mat D2 = kron(Mat::eye(N), c.sub(bar_diag(c.sp, 1)));
  Mat D2i = kron(Mat::eye(N), c.sub(bar_diag(c.sp, -1)));
  Mat X = D2 * (P * transpose_t(PP, c.sp, 1) * P) * D2i;
  if (N % 2 == 1) {
    Rat alpha = c.sub((qhalf(1) - qhalf(-1)).pow(2));
    int m = (N - 1) / 2;
    X.add_to(m * N + m, m * N + m, -alpha);
  }
  Mat want = c.sub(build_Qpart(c.sp, c.u, c.v));
  cex = diff_scaled(X, Rat::from_int(1), want, Rat::from_int(1), c);
  return cex.empty();
}

// ---- fusion kernel identities -----------------------------------------------

bool c_em13(const Ctx& c, const Mat& R1q2, std::string& cex) {
  const int N = c.sp.N;
  for (int l = 0; l < N; ++l) {
    if (l == N - 1 - l) continue;
    Vec e{{l * N + l, Rat::from_int(1)}};
    if (!col_apply(R1q2, e).empty() || !row_apply(e, R1q2).empty()) {
      cex = c.point() + "; R(1,q^2) does not annihilate |l,l> at l=" + std::to_string(l);
      return false;
    }
  }
  return true;
}

bool c_em14(const Ctx& c, const Mat& R1q2, const Rat& cq, std::string& cex) {
  const int N = c.sp.N;
  const Rat one = Rat::from_int(1);
  Rat q = c.q(1), qi = c.q(-1);
  for (int l = 1; l <= N - 2; ++l) {
    Vec e1l{{l, one}}, el1{{l * N, one}};
    bool ok = vec_eq(col_apply(R1q2, e1l), {{l, cq}, {l * N, -q * cq}}) &&
              vec_eq(col_apply(R1q2, el1), {{l * N, cq}, {l, -qi * cq}}) &&
              vec_eq(row_apply(el1, R1q2), {{l * N, cq}, {l, -q * cq}}) &&
              vec_eq(row_apply(e1l, R1q2), {{l, cq}, {l * N, -qi * cq}});
    if (!ok) {
      cex = c.point() + "; kernel-vector images wrong at l=" + std::to_string(l);
      return false;
    }
  }
  return true;
}

bool c_em15(const Ctx& c, const Mat& R1q2, std::string& cex) {
  const int N = c.sp.N;
  Rat c13, c12;
  Mat R23c = embed_pair(R1q2, N, 3, 1, 2);
  Mat R13q2v = embed_pair(cleared_R(c, c.u, c.q(2) * c.v, &c13), N, 3, 0, 2);
  Mat R12uv = embed_pair(cleared_R(c, c.u, c.v, &c12), N, 3, 0, 1);
  Rat scale = c13 * c12 * c.f(c.u, c.v);
  for (int l = 1; l <= N - 2; ++l) {
    Vec e{{comp_idx(N, {0, l, 0}), Rat::from_int(1)}};
    Vec lhs = col_apply(R23c, col_apply(R13q2v, col_apply(R12uv, e)));
    Vec rhs = col_apply(R23c, e);
    if (!vec_eq_scaled(lhs, Rat::from_int(1), rhs, scale)) {
      cex = c.point() + "; column eigenrelation fails at l=" + std::to_string(l);
      return false;
    }
    Vec lhs2 = row_apply(row_apply(row_apply(e, R12uv), R13q2v), R23c);
    Vec rhs2 = row_apply(e, R23c);
    if (!vec_eq_scaled(lhs2, Rat::from_int(1), rhs2, scale)) {
      cex = c.point() + "; row eigenrelation fails at l=" + std::to_string(l);
      return false;
    }
  }
  return true;
}

bool c_em1819(const Ctx& c, const Mat& R1q2, bool row_side, std::string& cex) {
  const int N = c.sp.N;
  AlgebraSpec small = make_spec(c.sp.fam, c.sp.n - 1);
  const int Ns = small.N;
  Ctx cs(small, c.symbolic, c.s, c.u, c.v, c.w);
  Rat csmall;
  Mat Rs = cleared_R(cs, c.u, c.v, &csmall);
  long dim4 = 1;
  for (int i = 0; i < 4; ++i) dim4 *= N;
  Mat R13small(static_cast<int>(dim4), static_cast<int>(dim4));
  for (const auto& [rc, val] : Rs.e) {
    int i1 = rc.first / Ns, k1 = rc.first % Ns;
    int j1 = rc.second / Ns, l1 = rc.second % Ns;
    for (int b = 0; b < N; ++b)
      for (int d = 0; d < N; ++d)
        R13small.set(static_cast<int>(comp_idx(N, {i1 + 1, b, k1 + 1, d})),
                     static_cast<int>(comp_idx(N, {j1 + 1, b, l1 + 1, d})), val);
  }
  Rat c14, c13;
  Mat R12c = embed_pair(R1q2, N, 4, 0, 1);
  Mat R34c = embed_pair(R1q2, N, 4, 2, 3);
  Mat R14 = embed_pair(cleared_R(c, c.u, c.q(2) * c.v, &c14), N, 4, 0, 3);
  Mat R13 = embed_pair(cleared_R(c, c.u, c.v, &c13), N, 4, 0, 2);
  for (int i = 1; i <= N - 2; ++i)
    for (int j = 1; j <= N - 2; ++j) {
      Vec e{{comp_idx(N, {i, 0, j, 0}), Rat::from_int(1)}};
      Vec lhs, rhs;
      if (!row_side) {
        lhs = col_apply(R12c, col_apply(R34c, col_apply(R14, col_apply(R13, e))));
        rhs = col_apply(R12c, col_apply(R34c, col_apply(R13small, e)));
      } else {
        lhs = row_apply(row_apply(row_apply(row_apply(e, R13), R14), R34c), R12c);
        rhs = row_apply(row_apply(row_apply(e, R13small), R34c), R12c);
      }
      if (!vec_eq_scaled(lhs, csmall, rhs, c13 * c14)) {
        cex = c.point() + "; rank-drop reduction fails at (i,j)=(" + std::to_string(i) + "," +
              std::to_string(j) + ")";
        return false;
      }
    }
  return true;
}

bool c_em6(const Ctx& c, const Mat& R1q2, const Rat& a, std::string& cex) {
  const int N = c.sp.N;
  Mat Lu = cleared_R(c, c.u, a, nullptr);
  Mat Lq2u = cleared_R(c, c.q(2) * c.u, a, nullptr);
  Mat R12 = embed_pair(R1q2, N, 3, 0, 1);
  Mat L1 = embed_pair(Lu, N, 3, 0, 2);
  Mat L2 = embed_pair(Lq2u, N, 3, 1, 2);
  cex = diff_witness(R12 * (L1 * L2), (L2 * L1) * R12, c);
  return cex.empty();
}

bool c_em9(const Ctx& c, const Mat& R1q2, const Rat& a, std::string& cex) {
  const int N = c.sp.N;
  Mat Lu = cleared_R(c, c.u, a, nullptr);
  Mat Lv = cleared_R(c, c.v, a, nullptr);
  Mat Lq2v = cleared_R(c, c.q(2) * c.v, a, nullptr);
  Mat LL23 = embed_pair(R1q2, N, 4, 1, 2) * embed_pair(Lv, N, 4, 1, 3) *
             embed_pair(Lq2v, N, 4, 2, 3);
  Mat L1u = embed_pair(Lu, N, 4, 0, 3);
  Mat R12f = embed_pair(cleared_R(c, c.u, c.v, nullptr), N, 4, 0, 1);
  Mat R13f = embed_pair(cleared_R(c, c.u, c.q(2) * c.v, nullptr), N, 4, 0, 2);
  cex = diff_witness(R12f * R13f * L1u * LL23, LL23 * L1u * R13f * R12f, c);
  return cex.empty();
}

// Scalar entry function of the rank-one tail, with the crossing parameter an
// explicit argument so it can be shifted by q^2.
Rat qfun(const AlgebraSpec& sp, int i, int j, const Rat& uu, const Rat& vv, const Rat& xifac) {
  const int N = sp.N;
  FGG t = fgg(vv * xifac, uu);
  Rat pref = qhalf(sp.twobar[static_cast<size_t>(i - 1)] - sp.twobar[static_cast<size_t>(j - 1)]);
  if (sp.eps[static_cast<size_t>(i - 1)] * sp.eps[static_cast<size_t>(j - 1)] < 0) pref = -pref;
  const int ip = N + 1 - i;
  Rat val;
  const Rat one = Rat::from_int(1);
  if (i == j && i != ip) val = t.f - one;
  else if (i == j && i == ip) val = t.f - one - (qhalf(1) - qhalf(-1)).pow(2);
  else if (i < j) val = t.g;
  else val = t.gt;
  return pref * val;
}

bool c_em31(const AlgebraSpec& sp, std::string& cex) {
  const int N = sp.N;
  Rat uu = Rat::var(VAR_U), vv = Rat::var(VAR_V);
  Rat xi = xival(sp);
  Rat q2 = qpow_r(2);
  for (int l = 2; l <= N - 1; ++l)
    for (int j = 2; j <= N - 1; ++j) {
      Rat lhs = qfun(sp, l, j, uu, vv, xi) -
                qpow_r(1) * qfun(sp, 1, j, uu, vv, xi) * qfun(sp, l, 1, uu, q2 * vv, xi);
      Rat rhs = qfun(sp, l, j, uu, vv, q2 * xi);
      if (!(lhs == rhs)) {
        cex = "tail-entry recursion fails at (l,j)=(" + std::to_string(l) + "," +
              std::to_string(j) + ")";
        return false;
      }
    }
  return true;
}

bool c_fshift(std::string& cex) {
  Rat uu = Rat::var(VAR_U), vv = Rat::var(VAR_V);
  Rat q2 = qpow_r(2);
  FGG srt = fgg(uu, q2 * vv);
  FGG plain = fgg(uu, vv);
  if (srt.f - qpow_r(1) * srt.g * plain.gt == plain.f) return true;
  cex = "f(u,q^2 v) - q g(u,q^2 v) gt(u,v) != f(u,v)";
  return false;
}

// ---- plumbing ----------------------------------------------------------------

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

CheckResult finish(const std::string& id, const std::string& mode, bool ok,
                   const std::string& cex, const Timer& t) {
  CheckResult r;
  r.check_id = id;
  r.status = ok ? "pass" : "fail";
  r.mode = mode;
  if (!ok) r.counterexample = cex;
  r.timing_ms = t.ms();
  static const bool trace = std::getenv("QLOOP_TRACE") != nullptr;
  if (trace)
    std::fprintf(stderr, "[trace] %-14s %-7s %-8s %6ldms\n", r.check_id.c_str(),
                 r.status.c_str(), r.mode.c_str(), r.timing_ms);
  return r;
}

CheckResult skipped(const std::string& id, const std::string& mode, const std::string& why) {
  CheckResult r;
  r.check_id = id;
  r.status = "skipped";
  r.mode = mode;
  r.counterexample = why;
  return r;
}

}  // namespace

Rat Sampler::frac() {
  long num = 0;
  while (num == 0) num = static_cast<long>(next() % 19) - 9;
  long den = static_cast<long>(next() % 9) + 1;
  return Rat::from_frac(num, den);
}

unsigned long Sampler::next() {
  // SplitMix64: tiny, seed-stable across platforms.
  state_ += 0x9e3779b97f4a7c15ull;
  unsigned long z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void Sampler::tuple(const AlgebraSpec& sp, Rat& s, Rat& u, Rat& v, Rat& w) {
  while (true) {
    s = frac();
    u = frac();
    v = frac();
    w = frac();
    // |s| = 1 collapses q - 1/q; 0 impossible by construction.
    if (s == Rat::from_int(1) || s == Rat::from_int(-1)) continue;
    Rat q2 = rat_subst(qpow_r(2), {{VAR_S, s}});
    Rat xi = rat_subst(xival(sp), {{VAR_S, s}});
    bool bad = false;
    const std::pair<Rat, Rat> pairs[3] = {{u, v}, {u, w}, {v, w}};
    for (const auto& [x, y] : pairs)
      if (x == y || x == y * xi || y == x * xi || x == q2 * y || y == q2 * x) bad = true;
    if (u == v * xi * xi || v == u * xi * xi) bad = true;
    if (!bad) return;
  }
}

std::vector<CheckResult> run_rmatrix_suite(const AlgebraSpec& sp, const VerifyOptions& opt) {
  const bool symbolic = opt.mode == "symbolic" || (opt.mode == "auto" && sp.N <= 4);
  const std::string mode = symbolic ? "symbolic" : "sampled";
  const bool xi_is_one = sp.xi_sign == 1 && sp.xi_qpow == 0;          // D-type rank 1
  const bool fused_singular = sp.xi_sign == 1 && sp.xi_qpow == -2;    // D-type rank 2
  std::vector<CheckResult> out;

  // Contexts: one symbolic, or `samples` seeded tuples (shared by all checks
  // so report bytes are independent of check order).
  std::vector<Ctx> ctxs;
  if (symbolic) {
    ctxs.emplace_back(sp, true, Rat::var(VAR_S), Rat::var(VAR_U), Rat::var(VAR_V),
                      Rat::var(VAR_W));
  } else {
    Sampler smp(opt.seed);
    for (int t = 0; t < opt.samples; ++t) {
      Rat s, u, v, w;
      smp.tuple(sp, s, u, v, w);
      ctxs.emplace_back(sp, false, s, u, v, w);
    }
  }
  const Mut nomut{};

  auto run_each = [&](const std::string& id, auto&& fn) {
    Timer t;
    std::string cex;
    bool ok = true;
    for (size_t i = 0; i < ctxs.size() && ok; ++i) {
      std::string c1;
      ok = fn(ctxs[i], c1);
      if (!ok)
        cex = "seed=" + std::to_string(opt.seed) + " trial=" + std::to_string(i) + "; " + c1;
    }
    out.push_back(finish(id, mode, ok, cex, t));
  };

  run_each("ybe", [&](const Ctx& c, std::string& x) { return c_ybe(c, nomut, x); });
  run_each("unitarity", [&](const Ctx& c, std::string& x) { return c_unitarity(c, nomut, x); });
  run_each("crossing", [&](const Ctx& c, std::string& x) { return c_crossing(c, nomut, x); });
  if (sp.fam == Family::A1)
    out.push_back(skipped("cross-doubled", mode, "A-type: single crossing relation only"));
  else
    run_each("cross-doubled",
             [&](const Ctx& c, std::string& x) { return c_cross_doubled(c, nomut, x); });
  run_each("twist", [&](const Ctx& c, std::string& x) { return c_twist(c, nomut, x); });
  run_each("reflec", [&](const Ctx& c, std::string& x) { return c_reflec(c, nomut, x); });
  run_each("scaling-inv", [&](const Ctx& c, std::string& x) { return c_scaling_inv(c, x); });

  run_each("poles", [&](const Ctx& c, std::string& x) { return c_pole_v(c, x); });
  if (sp.fam == Family::A1)
    out.push_back(skipped("pole-vxi", mode, "A-type: no rank-one tail pole"));
  else if (xi_is_one)
    out.push_back(skipped("pole-vxi", mode, "xi=1: the two poles coincide"));
  else
    run_each("pole-vxi", [&](const Ctx& c, std::string& x) { return c_pole_vxi(c, x); });
  if (sp.fam == Family::A1)
    out.push_back(skipped("cen2", mode, "A-type variant covered by the gauss suite"));
  else if (xi_is_one)
    out.push_back(skipped("cen2", mode, "xi=1: residue point collides with the u=v pole"));
  else
    run_each("cen2", [&](const Ctx& c, std::string& x) { return c_cen2(c, x); });
  if (sp.fam == Family::A1)
    out.push_back(skipped("qerp", mode, "A-type: no rank-one tail"));
  else
    run_each("qerp", [&](const Ctx& c, std::string& x) { return c_qerp(c, x); });

  // Fusion block: symbolic mode runs it symbolically; sampled mode runs it
  // once at the fixed reference point (matching the recorded evaluations).
  {
    std::vector<CheckResult> fused;
    if (fused_singular) {
      const char* why = "xi=q^-2: R(1,q^2) sits on the u=v*xi pole";
      for (const char* id : {"em13", "em14", "em15", "em18", "em19", "em6", "em9", "fshift"})
        fused.push_back(skipped(id, mode, why));
    } else {
      Ctx fc = symbolic ? ctxs[0]
                        : Ctx(sp, false, Rat::from_frac(3, 2), Rat::from_frac(7, 5),
                              Rat::from_frac(11, 9), Rat::from_frac(13, 8));
      Rat a = symbolic ? Rat::var(VAR_A) : Rat::from_frac(5, 7);
      Rat cq;
      Mat R1q2 = cleared_R(fc, Rat::from_int(1), fc.q(2), &cq);
      auto one_shot = [&](const std::string& id, auto&& fn) {
        Timer t;
        std::string cex;
        bool ok = fn(cex);
        fused.push_back(finish(id, mode, ok, cex, t));
      };
      one_shot("em13", [&](std::string& x) { return c_em13(fc, R1q2, x); });
      one_shot("em14", [&](std::string& x) { return c_em14(fc, R1q2, cq, x); });
      one_shot("em15", [&](std::string& x) { return c_em15(fc, R1q2, x); });
      if (sp.fam != Family::A1 && sp.n >= 2) {
        one_shot("em18", [&](std::string& x) { return c_em1819(fc, R1q2, false, x); });
        one_shot("em19", [&](std::string& x) { return c_em1819(fc, R1q2, true, x); });
      } else {
        fused.push_back(skipped("em18", mode, "needs a lower-rank member of the same family"));
        fused.push_back(skipped("em19", mode, "needs a lower-rank member of the same family"));
      }
      one_shot("em6", [&](std::string& x) { return c_em6(fc, R1q2, a, x); });
      one_shot("em9", [&](std::string& x) { return c_em9(fc, R1q2, a, x); });
      one_shot("fshift", [&](std::string& x) { return c_fshift(x); });
    }
    for (auto& r : fused) out.push_back(std::move(r));
  }
  if (sp.fam == Family::A1)
    out.push_back(skipped("em31", "symbolic", "A-type: no rank-one tail"));
  else if (sp.N < 3)
    out.push_back(skipped("em31", "symbolic", "no interior indices at this rank"));
  else {
    Timer t;
    std::string cex;
    bool ok = c_em31(sp, cex);
    out.push_back(finish("em31", "symbolic", ok, cex, t));
  }

  out.push_back(check_scaling_limit(sp, opt.scaling_order));

  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return out;
}

namespace {

// Minimal eps-exponent across terms; the valuation of a polynomial.
long eps_valuation(const Poly& p) {
  assert(!p.is_zero());
  long m = p.t[0].e[VAR_EPS];
  for (const auto& tm : p.t) m = std::min(m, static_cast<long>(tm.e[VAR_EPS]));
  return m;
}

}  // namespace

CheckResult check_scaling_limit(const AlgebraSpec& sp, int order) {
  Timer tm;
  assert(order == 0 || order == 1);
  const int N = sp.N;
  const int K = order + 1;
  const Rat one = Rat::from_int(1);
  Rat epsv = Rat::var(VAR_EPS);
  Rat Uv = Rat::var(VAR_U), Vv = Rat::var(VAR_V), Cv = Rat::var(VAR_A);
  auto texp = [&](const Rat& x) {
    Rat acc = one, pw = one;
    long fact = 1;
    for (int k = 1; k <= K; ++k) {
      pw = pw * x;
      fact *= k;
      acc = acc + pw * Rat::from_frac(1, fact);
    }
    return acc;
  };
  const std::map<int, Rat> subs = {{VAR_U, texp(epsv * Uv)},
                                   {VAR_V, texp(epsv * Vv)},
                                   {VAR_S, texp(epsv * Cv * Rat::from_frac(1, 4))}};
  Mat R = build_R(sp, Rat::var(VAR_U), Rat::var(VAR_V));
  Rat kappa = Rat::from_frac(-sp.xi_qpow, 2);
  Rat D = Uv - Vv + Cv * kappa;
  const bool bcd = sp.fam == Family::B1 || sp.fam == Family::C1 || sp.fam == Family::D1;
  const bool a2 = sp.fam == Family::A2even || sp.fam == Family::A2odd;
  std::string cex;
  for (const auto& [rc, val] : R.e) {
    int i1 = rc.first / N, j1 = rc.first % N;
    int i2 = rc.second / N, j2 = rc.second % N;
    Rat exp0, exp1;
    if (rc.first == rc.second) exp0 += one;
    if (i1 == j2 && j1 == i2) {
      exp0 += Cv * (Uv - Vv).inv();
      if (i1 != j1) exp1 += Rat::from_frac(j1 > i1 ? 1 : -1, 2) * Cv;
    }
    if (sp.fam != Family::A1 && i1 == N - 1 - j1 && i2 == N - 1 - j2) {
      int qa = j1, qb = j2;
      int sgn = sp.eps[static_cast<size_t>(qa)] * sp.eps[static_cast<size_t>(qb)];
      Rat k0 = bcd ? -Cv * D.inv() : Rat();
      if (bcd) exp0 += (sgn < 0 ? -k0 : k0);
      if ((bcd || a2) && qa != qb) {
        Rat dij = Rat::from_frac(sp.twobar[static_cast<size_t>(qa)] -
                                     sp.twobar[static_cast<size_t>(qb)],
                                 2);
        Rat term = Rat::from_frac(qb > qa ? 1 : -1, 2) * Cv + Cv * dij * Rat::from_frac(1, 2) * k0;
        exp1 += (sgn < 0 ? -term : term);
      }
    }
    // Claim: the substituted entry agrees with E = exp0 + eps*exp1 up to
    // O(eps^{order+1}).  Compare by cross-multiplication and read the eps
    // valuation off the numerator polynomials; no rational reduction needed.
    Rat nsub = poly_eval(val.num(), subs);
    Rat dsub = poly_eval(val.den(), subs);
    Rat E = order >= 1 ? exp0 + epsv * exp1 : exp0;
    Rat diff = nsub * Rat::of(E.den()) - Rat::of(E.num()) * dsub;
    if (!diff.is_zero()) {
      // nsub, dsub, diff carry integer denominators only; E.den() is eps-free.
      long lhs = eps_valuation(diff.num());
      long rhs = K + eps_valuation(dsub.num());
      if (lhs < rhs) {
        cex = "entry (" + std::to_string(rc.first) + "," + std::to_string(rc.second) +
              ") expansion mismatch below order " + std::to_string(order + 1);
        break;
      }
    }
  }
  return finish("scaling-limit", "symbolic", cex.empty(), cex, tm);
}

std::vector<CheckResult> run_mutation_suite() {
  // Documented flip-sets at the fixed point s=3/2, u=7/5, v=11/9, w=13/8.
  struct Case {
    const char* id;
    Family fam;
    int rank;
    Mut mut;
    std::vector<std::string> expected_fails;
  };
  Mut m_xi, m_al, m_fe, m_nb, m_dq, m_tn;
  m_xi.xi_q2 = true;
  m_al.drop_alpha = true;
  m_fe.flip_eps = 0;
  m_nb.neg_bar = 0;
  m_dq.drop_Q = true;
  m_tn.t_noeps = true;
  const std::vector<Case> cases = {
      {"mut-baseline-B1", Family::B1, 1, Mut{}, {}},
      {"mut-baseline-C1", Family::C1, 2, Mut{}, {}},
      {"mut-xi-q2", Family::B1, 1, m_xi, {"cross-doubled", "crossing", "unitarity", "ybe"}},
      {"mut-drop-alpha", Family::B1, 1, m_al, {"cross-doubled", "crossing", "unitarity", "ybe"}},
      {"mut-flip-eps", Family::C1, 2, m_fe,
       {"cross-doubled", "crossing", "reflec", "unitarity", "ybe"}},
      {"mut-neg-bar", Family::B1, 1, m_nb,
       {"cross-doubled", "crossing", "reflec", "unitarity", "ybe"}},
      {"mut-drop-Q", Family::B1, 1, m_dq, {"cross-doubled", "crossing"}},
      {"mut-t-noeps", Family::C1, 2, m_tn, {"crossing"}},
  };
  std::vector<CheckResult> out;
  for (const auto& cs : cases) {
    Timer t;
    AlgebraSpec sp = make_spec(cs.fam, cs.rank);
    Ctx c(sp, false, Rat::from_frac(3, 2), Rat::from_frac(7, 5), Rat::from_frac(11, 9),
          Rat::from_frac(13, 8));
    std::vector<std::string> fails;
    std::string scratch;
    if (!c_ybe(c, cs.mut, scratch)) fails.push_back("ybe");
    if (!c_unitarity(c, cs.mut, scratch)) fails.push_back("unitarity");
    if (!c_crossing(c, cs.mut, scratch)) fails.push_back("crossing");
    if (sp.fam != Family::A1 && !c_cross_doubled(c, cs.mut, scratch))
      fails.push_back("cross-doubled");
    if (!c_twist(c, cs.mut, scratch)) fails.push_back("twist");
    if (!c_reflec(c, cs.mut, scratch)) fails.push_back("reflec");
    std::sort(fails.begin(), fails.end());
    bool ok = fails == cs.expected_fails;
    std::string cex;
    if (!ok) {
      cex = "observed fail-set {";
      for (const auto& f : fails) cex += f + ",";
      cex += "} differs from the documented one";
    }
    out.push_back(finish(cs.id, "sampled", ok, cex, t));
  }
  // Documented negative: a generic diagonal twist without the pairing
  // constraint must NOT commute with R (checked on a tail-carrying family).
  {
    Timer t;
    AlgebraSpec sp = make_spec(Family::D1, 2);
    Ctx c(sp, false, Rat::from_frac(3, 2), Rat::from_frac(7, 5), Rat::from_frac(11, 9),
          Rat::from_frac(13, 8));
    Mat K(sp.N, sp.N);
    for (int i = 0; i < sp.N; ++i) K.set(i, i, Rat::from_int(i + 1));
    Mat KK = kron(K, K);
    Mat R12 = c.R(c.u, c.v);
    bool noncommuting = !(R12 * KK == KK * R12);
    out.push_back(finish("mut-generic-twist-fails", "sampled", noncommuting,
                         "generic diagonal twist unexpectedly commutes", t));
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (r.status == "fail") return false;
  return true;
}

}  // namespace qloop
