#include "qloop/algebra.hpp"

#include <cassert>

namespace qloop {

const char* family_name(Family f) {
  switch (f) {
    case Family::A1: return "A1";
    case Family::B1: return "B1";
    case Family::C1: return "C1";
    case Family::D1: return "D1";
    case Family::A2even: return "A2even";
    case Family::A2odd: return "A2odd";
  }
  return "?";
}

std::optional<Family> family_parse(const std::string& name) {
  for (Family f : {Family::A1, Family::B1, Family::C1, Family::D1, Family::A2even, Family::A2odd})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

AlgebraSpec make_spec(Family fam, int rank) {
  assert(rank >= 1);
  AlgebraSpec sp;
  sp.fam = fam;
  sp.n = rank;
  const int n = rank;
  switch (fam) {
    case Family::A1: sp.N = rank + 1; break;
    case Family::B1:
    case Family::A2even: sp.N = 2 * n + 1; break;
    case Family::C1:
    case Family::D1:
    case Family::A2odd: sp.N = 2 * n; break;
  }
  const int N = sp.N;
  switch (fam) {
    case Family::A1: sp.xi_sign = 1; sp.xi_qpow = -N; break;
    case Family::B1: sp.xi_sign = 1; sp.xi_qpow = 1 - 2 * n; break;
    case Family::C1: sp.xi_sign = 1; sp.xi_qpow = -2 - 2 * n; break;
    case Family::D1: sp.xi_sign = 1; sp.xi_qpow = 2 - 2 * n; break;
    case Family::A2even: sp.xi_sign = -1; sp.xi_qpow = -1 - 2 * n; break;
    case Family::A2odd: sp.xi_sign = -1; sp.xi_qpow = -2 * n; break;
  }
  sp.eps.assign(static_cast<size_t>(N), 1);
  if (fam == Family::C1)
    for (int i = 1; i <= N; ++i) sp.eps[static_cast<size_t>(i - 1)] = (n - i >= 0) ? 1 : -1;
  auto& tb = sp.twobar;
  switch (fam) {
    case Family::A1:
      for (int i = 1; i <= N; ++i) tb.push_back(N + 1 - 2 * i);
      break;
    case Family::B1:
    case Family::A2even:
      for (int i = 1; i <= n; ++i) tb.push_back(2 * n - 2 * i + 1);
      tb.push_back(0);
      for (int i = n; i >= 1; --i) tb.push_back(-(2 * n - 2 * i + 1));
      break;
    case Family::C1:
      for (int i = 1; i <= n; ++i) tb.push_back(2 * (n - i + 1));
      for (int i = n; i >= 1; --i) tb.push_back(-2 * (n - i + 1));
      break;
    case Family::D1:
    case Family::A2odd:
      for (int i = 1; i <= n; ++i) tb.push_back(2 * (n - i));
      for (int i = n; i >= 1; --i) tb.push_back(-2 * (n - i));
      break;
  }
  assert(static_cast<int>(tb.size()) == N);
  for (int i = 0; i < N; ++i) assert(tb[static_cast<size_t>(i)] + tb[static_cast<size_t>(N - 1 - i)] == 0);
  return sp;
}

Rat qhalf(int k) { return Rat::var(VAR_S, k); }

Rat qpow_r(int k) { return Rat::var(VAR_S, 2 * k); }

Rat xival(const AlgebraSpec& sp) {
  Rat x = qhalf(2 * sp.xi_qpow);
  return sp.xi_sign < 0 ? -x : x;
}

FGG fgg(const Rat& u, const Rat& v) {
  const Rat q = qpow_r(1);
  const Rat qi = qpow_r(-1);
  Rat d = (u - v).inv();
  FGG r;
  r.f = (q * u - qi * v) * d;
  r.g = (q - qi) * u * d;
  r.gt = (q - qi) * v * d;
  return r;
}

namespace {

struct MutTables {
  Rat xi;
  std::vector<int> eps, tb;
};

MutTables apply_mut(const AlgebraSpec& sp, const Mut& mut) {
  MutTables m;
  m.xi = xival(sp);
  if (mut.xi_q2) m.xi = m.xi * qpow_r(2);
  m.eps = sp.eps;
  m.tb = sp.twobar;
  if (mut.flip_eps >= 0) m.eps[static_cast<size_t>(mut.flip_eps)] *= -1;
  if (mut.neg_bar >= 0) m.tb[static_cast<size_t>(mut.neg_bar)] *= -1;
  return m;
}

void add_Ppart(Mat& R, const AlgebraSpec& sp, const Rat& u, const Rat& v) {
  const int N = sp.N;
  const Rat one = Rat::from_int(1);
  FGG pg = fgg(u, v);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      Rat p = (i == j) ? pg.f - one : (i < j ? pg.g : pg.gt);
      R.add_to((i - 1) * N + (j - 1), (j - 1) * N + (i - 1), p);
    }
}

void add_Qpart(Mat& R, const AlgebraSpec& sp, const Rat& u, const Rat& v, const MutTables& m,
               bool drop_alpha) {
  const int N = sp.N;
  const Rat one = Rat::from_int(1);
  FGG qg = fgg(v * m.xi, u);
  Rat alpha = (qhalf(1) - qhalf(-1)).pow(2);
  for (int i = 1; i <= N; ++i) {
    const int ip = N + 1 - i;
    for (int j = 1; j <= N; ++j) {
      const int jp = N + 1 - j;
      int sgn = m.eps[static_cast<size_t>(i - 1)] * m.eps[static_cast<size_t>(j - 1)];
      Rat pref = qhalf(m.tb[static_cast<size_t>(i - 1)] - m.tb[static_cast<size_t>(j - 1)]);
      if (sgn < 0) pref = -pref;
      Rat val;
      if (i == j && i != ip) val = qg.f - one;
      else if (i == j && i == ip) val = drop_alpha ? qg.f - one : qg.f - one - alpha;
      else if (i < j) val = qg.g;
      else val = qg.gt;
      R.add_to((ip - 1) * N + (i - 1), (jp - 1) * N + (j - 1), pref * val);
    }
  }
}

}  // namespace

Mat build_R(const AlgebraSpec& sp, const Rat& u, const Rat& v, const Mut& mut) {
  const int N = sp.N;
  Mat R(N * N, N * N);
  const Rat one = Rat::from_int(1);
  for (int i = 0; i < N * N; ++i) R.add_to(i, i, one);
  add_Ppart(R, sp, u, v);
  if (sp.fam != Family::A1 && !mut.drop_Q)
    add_Qpart(R, sp, u, v, apply_mut(sp, mut), mut.drop_alpha);
  return R;
}

Mat build_Ppart(const AlgebraSpec& sp, const Rat& u, const Rat& v) {
  Mat R(sp.N * sp.N, sp.N * sp.N);
  add_Ppart(R, sp, u, v);
  return R;
}

Mat build_Qpart(const AlgebraSpec& sp, const Rat& u, const Rat& v) {
  Mat R(sp.N * sp.N, sp.N * sp.N);
  if (sp.fam != Family::A1) add_Qpart(R, sp, u, v, apply_mut(sp, Mut{}), false);
  return R;
}

Mat transpose_t(const Mat& R, const AlgebraSpec& sp, int factor, bool no_eps) {
  const int N = sp.N;
  Mat out(N * N, N * N);
  auto epsv = [&](int idx) { return no_eps ? 1 : sp.eps[static_cast<size_t>(idx)]; };
  for (const auto& [rc, val] : R.e) {
    int i = rc.first / N, j = rc.first % N;
    int k = rc.second / N, l = rc.second % N;
    if (factor == 1) {
      int ip = N - 1 - i, kp = N - 1 - k;
      Rat t = val;
      if (epsv(i) * epsv(k) < 0) t = -t;
      out.add_to(kp * N + j, ip * N + l, t);
    } else {
      int jp = N - 1 - j, lp = N - 1 - l;
      Rat t = val;
      if (epsv(j) * epsv(l) < 0) t = -t;
      out.add_to(i * N + lp, k * N + jp, t);
    }
  }
  return out;
}

Mat bar_diag(const AlgebraSpec& sp, int power) {
  Mat d(sp.N, sp.N);
  for (int i = 0; i < sp.N; ++i)
    d.set(i, i, qhalf(power * sp.twobar[static_cast<size_t>(i)]));
  return d;
}

Mat conj_bar1(const Mat& R, const AlgebraSpec& sp, int power) {
  const int N = sp.N;
  Mat out(N * N, N * N);
  for (const auto& [rc, val] : R.e) {
    int i = rc.first / N, j = rc.second / N;
    out.set(rc.first, rc.second,
            val * qhalf(power * (sp.twobar[static_cast<size_t>(i)] - sp.twobar[static_cast<size_t>(j)])));
  }
  return out;
}

Mat twist_diag(const AlgebraSpec& sp) {
  const int N = sp.N;
  Mat d(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      d.set(i * N + j, i * N + j, qhalf(sp.twobar[static_cast<size_t>(i)] + sp.twobar[static_cast<size_t>(j)]));
  return d;
}

}  // namespace qloop
