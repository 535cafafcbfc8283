#pragma once
// Sparse multivariate polynomials over Z in the fixed variable set
// {s, u, v, w, a, eps}, with graded-lex term order.  The deformation
// parameter q is represented as s^2 throughout, so half-integer q-powers
// stay polynomial.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qloop {

inline constexpr int NV = 6;
using Expo = std::array<int16_t, NV>;

enum : int { VAR_S = 0, VAR_U = 1, VAR_V = 2, VAR_W = 3, VAR_A = 4, VAR_EPS = 5 };
extern const char* const VAR_NAMES[NV];

inline int total_deg(const Expo& e) {
  int t = 0;
  for (auto x : e) t += x;
  return t;
}

// Graded lexicographic order; ties broken with s > u > v > w > a > eps.
inline bool grlex_less(const Expo& x, const Expo& y) {
  int dx = total_deg(x), dy = total_deg(y);
  if (dx != dy) return dx < dy;
  for (int i = 0; i < NV; ++i)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

struct Term {
  Expo e;
  mpz_class c;
};

class Poly {
 public:
  // Terms kept grlex-descending with unique exponents and nonzero coefficients.
  std::vector<Term> t;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly from_int(long x);
  static Poly from_mpz(const mpz_class& x);
  static Poly var(int idx, int pow = 1);
  static Poly mono(const Expo& e, const mpz_class& c);

  bool is_zero() const { return t.empty(); }
  bool is_one() const;
  // Leading (grlex-max) term; polynomial must be nonzero.
  const Term& lead() const { return t.front(); }
  int deg_in(int var) const;
  bool has_var(int var) const { return deg_in(var) > 0; }

  bool operator==(const Poly& o) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Expo& e, const mpz_class& c) const;
  Poly mul_int(const mpz_class& c) const;

  // Positive gcd of integer coefficients (0 for the zero polynomial).
  mpz_class int_content() const;

  std::string str() const;
};

// Exact division: requires that d divides p; aborts otherwise.
Poly poly_divexact(const Poly& p, const Poly& d);

// Polynomial gcd over Z (content * primitive-part with a primitive PRS in the
// top active variable).  Result has a positive leading coefficient.
Poly poly_gcd(Poly A, Poly B);

// Univariate view in variable `var`: c[k] = coefficient polynomial of var^k.
std::vector<Poly> univar_coeffs(const Poly& p, int var);
Poly from_univar(const std::vector<Poly>& cs, int var);

}  // namespace qloop
