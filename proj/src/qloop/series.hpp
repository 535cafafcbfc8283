#pragma once
// Laurent expansion of rational functions viewed as univariate in one
// variable, at 0 or at infinity, plus residue extraction and Taylor
// coefficients in eps.  Coefficients stay exact rationals in the
// remaining variables.

#include "qloop/rat.hpp"

#include <vector>

namespace qloop {

struct Series {
  int var = VAR_U;
  bool at_inf = false;
  long k0 = 0;         // exponent of the first stored coefficient
  std::vector<Rat> c;  // exponents run k0, k0+1, ... at 0 and k0, k0-1, ... at inf

  // Coefficient of var^t within the stored window (0 outside it).
  Rat coef(long t) const;
};

// Expansion around var = 0: r = sum_m c[m] * var^(k0+m).  k0 < 0 flags a pole.
Series expand_at_zero(const Rat& r, int var, int nterms);

// Expansion around var = inf in powers of 1/var: r = sum_m c[m] * var^(k0-m).
// k0 > 0 flags growth at infinity.
Series expand_at_inf(const Rat& r, int var, int nterms);

// Residue at a simple pole var = point: multiply by (var - point) and
// substitute.  A higher-order pole surfaces as pole_error.
Rat residue_at(const Rat& r, int var, const Rat& point);

// Taylor coefficients in eps by subtract-and-divide: returns
// [r|_{eps=0}, r', r'', ...] with r = sum_k out[k] * eps^k + O(eps^{order+1}).
// Requires r regular at eps = 0.
std::vector<Rat> taylor_eps(const Rat& r, int order);

}  // namespace qloop
