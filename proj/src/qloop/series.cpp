#include "qloop/series.hpp"

#include <cassert>

namespace qloop {

Rat Series::coef(long t) const {
  long idx = at_inf ? (k0 - t) : (t - k0);
  if (idx < 0 || idx >= static_cast<long>(c.size())) return Rat();
  return c[static_cast<size_t>(idx)];
}

namespace {

// Lowest index with a nonzero entry; cs must not be all-zero.
size_t low_index(const std::vector<Poly>& cs) {
  for (size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) return i;
  assert(false && "zero polynomial has no valuation");
  return 0;
}

// Shared recurrence: series coefficients of (sum P_k x^k) / (sum Q_k x^k)
// with Q_0 invertible, in ascending powers of x.
std::vector<Rat> divide_series(const std::vector<Poly>& P, const std::vector<Poly>& Q,
                               int nterms) {
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(nterms));
  Rat q0inv = Rat::of(Q[0]).inv();
  for (int m = 0; m < nterms; ++m) {
    Rat acc = (m < static_cast<int>(P.size())) ? Rat::of(P[static_cast<size_t>(m)]) : Rat();
    for (int j = 1; j <= m && j < static_cast<int>(Q.size()); ++j)
      acc = acc - Rat::of(Q[static_cast<size_t>(j)]) * out[static_cast<size_t>(m - j)];
    out.push_back(acc * q0inv);
  }
  return out;
}

}  // namespace

Series expand_at_zero(const Rat& r, int var, int nterms) {
  Series s;
  s.var = var;
  s.at_inf = false;
  if (r.is_zero() || nterms <= 0) return s;
  std::vector<Poly> P = univar_coeffs(r.num(), var);
  std::vector<Poly> Q = univar_coeffs(r.den(), var);
  size_t vn = low_index(P), vd = low_index(Q);
  P.erase(P.begin(), P.begin() + static_cast<long>(vn));
  Q.erase(Q.begin(), Q.begin() + static_cast<long>(vd));
  s.k0 = static_cast<long>(vn) - static_cast<long>(vd);
  s.c = divide_series(P, Q, nterms);
  return s;
}

Series expand_at_inf(const Rat& r, int var, int nterms) {
  Series s;
  s.var = var;
  s.at_inf = true;
  if (r.is_zero() || nterms <= 0) return s;
  std::vector<Poly> P = univar_coeffs(r.num(), var);
  std::vector<Poly> Q = univar_coeffs(r.den(), var);
  // Reverse so the recurrence runs in powers of 1/var.
  std::vector<Poly> Pr(P.rbegin(), P.rend());
  std::vector<Poly> Qr(Q.rbegin(), Q.rend());
  s.k0 = static_cast<long>(P.size()) - static_cast<long>(Q.size());
  s.c = divide_series(Pr, Qr, nterms);
  return s;
}

Rat residue_at(const Rat& r, int var, const Rat& point) {
  Rat shifted = r * (Rat::var(var) - point);
  return rat_subst(shifted, {{var, point}});
}

std::vector<Rat> taylor_eps(const Rat& r, int order) {
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(order) + 1);
  Rat cur = r;
  const Rat eps_inv = Rat::var(VAR_EPS, -1);
  const std::map<int, Rat> at0 = {{VAR_EPS, Rat()}};
  for (int k = 0; k <= order; ++k) {
    Rat ck = rat_subst(cur, at0);
    out.push_back(ck);
    if (k < order) cur = (cur - ck) * eps_inv;
  }
  return out;
}

}  // namespace qloop
