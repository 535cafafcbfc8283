#include "qloop/rat.hpp"

#include <cassert>
#include <cstdlib>
#include <utility>
#include <vector>

namespace qloop {

void Rat::fix_sign() {
  if (!den_.is_zero() && den_.lead().c < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

void Rat::canon() {
  assert(!den_.is_zero());
  if (num_.is_zero()) {
    den_ = Poly::from_int(1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = poly_divexact(num_, g);
    den_ = poly_divexact(den_, g);
  }
  fix_sign();
}

Rat Rat::from_int(long x) {
  Rat r;
  r.num_ = Poly::from_int(x);
  return r;
}

Rat Rat::from_frac(long n, long d) {
  assert(d != 0);
  Rat r;
  r.num_ = Poly::from_int(n);
  r.den_ = Poly::from_int(d);
  r.canon();
  return r;
}

Rat Rat::of(const Poly& p) {
  Rat r;
  r.num_ = p;
  return r;
}

Rat Rat::of(const Poly& n, const Poly& d) {
  Rat r;
  r.num_ = n;
  r.den_ = d;
  r.canon();
  return r;
}

Rat Rat::var(int idx, int pow) {
  Rat r;
  if (pow >= 0) {
    r.num_ = Poly::var(idx, pow);
  } else {
    r.num_ = Poly::from_int(1);
    r.den_ = Poly::var(idx, -pow);
  }
  return r;
}

bool Rat::operator==(const Rat& o) const {
  // Cross-multiplied comparison is immune to any canonicalization slip.
  return num_ * o.den_ == o.num_ * den_;
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Rat r;
  Poly g0 = poly_gcd(den_, o.den_);
  if (g0.is_one()) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    if (r.num_.is_zero()) return Rat();
    r.den_ = den_ * o.den_;
  } else {
    Poly bp = poly_divexact(den_, g0);
    Poly dp = poly_divexact(o.den_, g0);
    Poly t = num_ * dp + o.num_ * bp;
    if (t.is_zero()) return Rat();
    Poly g1 = poly_gcd(t, g0);
    if (g1.is_one()) {
      r.num_ = t;
      r.den_ = bp * o.den_;
    } else {
      r.num_ = poly_divexact(t, g1);
      r.den_ = bp * poly_divexact(o.den_, g1);
    }
  }
  r.fix_sign();
  return r;
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::operator*(const Rat& o) const {
  if (is_zero() || o.is_zero()) return Rat();
  Poly g1 = poly_gcd(num_, o.den_);
  Poly g2 = poly_gcd(o.num_, den_);
  Rat r;
  r.num_ = poly_divexact(num_, g1) * poly_divexact(o.num_, g2);
  r.den_ = poly_divexact(den_, g2) * poly_divexact(o.den_, g1);
  r.fix_sign();
  return r;
}

Rat Rat::operator/(const Rat& o) const { return *this * o.inv(); }

Rat Rat::inv() const {
  if (is_zero()) throw pole_error("reciprocal of zero");
  Rat r;
  r.num_ = den_;
  r.den_ = num_;
  r.fix_sign();
  return r;
}

Rat Rat::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Rat acc = Rat::from_int(1);
  Rat base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string Rat::str() const {
  auto wrap = [](const Poly& p) {
    std::string s = p.str();
    if (p.t.size() > 1) return "(" + s + ")";
    return s;
  };
  if (den_.is_one()) return num_.str();
  return wrap(num_) + "/" + wrap(den_);
}

Rat poly_eval(const Poly& p, const std::map<int, Rat>& vals) {
  // Per-variable power caches keep repeated exponents cheap.
  std::array<std::vector<Rat>, NV> cache;
  std::array<bool, NV> seeded{};
  auto power = [&](int var, int e) -> const Rat& {
    auto& cv = cache[var];
    if (!seeded[var]) {
      auto it = vals.find(var);
      cv.push_back(Rat::from_int(1));
      cv.push_back(it == vals.end() ? Rat::var(var) : it->second);
      seeded[var] = true;
    }
    while (static_cast<int>(cv.size()) <= e) cv.push_back(cv.back() * cv[1]);
    return cv[static_cast<size_t>(e)];
  };
  Rat acc;
  for (const auto& tm : p.t) {
    Rat term = Rat::of(Poly::from_mpz(tm.c));
    for (int i = 0; i < NV; ++i)
      if (tm.e[i] != 0) term = term * power(i, tm.e[i]);
    acc = acc + term;
  }
  return acc;
}

Rat rat_subst(const Rat& r, const std::map<int, Rat>& vals) {
  Rat dv = poly_eval(r.den(), vals);
  if (dv.is_zero())
    throw pole_error("substitution pole: denominator " + r.den().str() + " vanishes");
  return poly_eval(r.num(), vals) * dv.inv();
}

}  // namespace qloop
