#pragma once
// Rational functions num/den over Poly, kept in canonical form:
// gcd(num, den) = 1, den nonzero with positive grlex-leading coefficient,
// and zero stored as 0/1.  Canonical form makes string output and JSON
// serialization deterministic.

#include "qloop/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace qloop {

// Thrown when an evaluation or inversion hits a vanishing denominator.
struct pole_error : std::runtime_error {
  explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

class Rat {
 public:
  Rat() : num_(), den_(Poly::from_int(1)) {}

  static Rat from_int(long x);
  static Rat from_frac(long n, long d);
  static Rat of(const Poly& p);
  static Rat of(const Poly& n, const Poly& d);
  static Rat var(int idx, int pow = 1);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  bool operator==(const Rat& o) const;
  bool operator!=(const Rat& o) const { return !(*this == o); }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  // Reciprocal; throws pole_error on zero.
  Rat inv() const;
  // Integer power (negative exponents invert first).
  Rat pow(long k) const;

  // "num/den" with multi-term parts parenthesized; "/den" omitted when den=1.
  std::string str() const;

 private:
  Poly num_, den_;
  void canon();
  void fix_sign();
};

// Evaluate a polynomial with the listed variables replaced by rationals;
// unlisted variables stay symbolic.
Rat poly_eval(const Poly& p, const std::map<int, Rat>& vals);

// Substitute into a rational function; throws pole_error naming the
// denominator if it vanishes under the substitution.
Rat rat_subst(const Rat& r, const std::map<int, Rat>& vals);

}  // namespace qloop
