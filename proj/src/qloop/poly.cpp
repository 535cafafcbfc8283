#include "qloop/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <sstream>

namespace qloop {

const char* const VAR_NAMES[NV] = {"s", "u", "v", "w", "a", "eps"};

namespace {

struct GrlexGreater {
  bool operator()(const Expo& x, const Expo& y) const { return grlex_less(y, x); }
};

Expo expo_add(const Expo& x, const Expo& y) {
  Expo r;
  for (int i = 0; i < NV; ++i) r[i] = static_cast<int16_t>(x[i] + y[i]);
  return r;
}

Expo expo_sub(const Expo& x, const Expo& y) {
  Expo r;
  for (int i = 0; i < NV; ++i) r[i] = static_cast<int16_t>(x[i] - y[i]);
  return r;
}

bool expo_geq(const Expo& x, const Expo& y) {
  for (int i = 0; i < NV; ++i)
    if (x[i] < y[i]) return false;
  return true;
}

}  // namespace

Poly Poly::from_int(long x) { return from_mpz(mpz_class(x)); }

Poly Poly::from_mpz(const mpz_class& x) {
  Poly p;
  if (x != 0) p.t.push_back({Expo{}, x});
  return p;
}

Poly Poly::var(int idx, int pow) {
  Expo e{};
  e[idx] = static_cast<int16_t>(pow);
  return mono(e, 1);
}

Poly Poly::mono(const Expo& e, const mpz_class& c) {
  Poly p;
  if (c != 0) p.t.push_back({e, c});
  return p;
}

bool Poly::is_one() const {
  return t.size() == 1 && t[0].c == 1 && t[0].e == Expo{};
}

int Poly::deg_in(int var) const {
  int d = 0;
  for (const auto& tm : t) d = std::max(d, static_cast<int>(tm.e[var]));
  return d;
}

bool Poly::operator==(const Poly& o) const {
  if (t.size() != o.t.size()) return false;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i].e != o.t[i].e || t[i].c != o.t[i].c) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& tm : r.t) tm.c = -tm.c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.t.reserve(t.size() + o.t.size());
  size_t i = 0, j = 0;
  while (i < t.size() && j < o.t.size()) {
    if (t[i].e == o.t[j].e) {
      mpz_class c = t[i].c + o.t[j].c;
      if (c != 0) r.t.push_back({t[i].e, c});
      ++i, ++j;
    } else if (grlex_less(o.t[j].e, t[i].e)) {
      r.t.push_back(t[i]);
      ++i;
    } else {
      r.t.push_back(o.t[j]);
      ++j;
    }
  }
  for (; i < t.size(); ++i) r.t.push_back(t[i]);
  for (; j < o.t.size(); ++j) r.t.push_back(o.t[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.t.size() == 1) return mul_term(o.t[0].e, o.t[0].c);
  if (t.size() == 1) return o.mul_term(t[0].e, t[0].c);
  std::map<Expo, mpz_class, GrlexGreater> acc;
  for (const auto& x : t)
    for (const auto& y : o.t) acc[expo_add(x.e, y.e)] += x.c * y.c;
  Poly r;
  r.t.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) r.t.push_back({e, c});
  return r;
}

Poly Poly::mul_term(const Expo& e, const mpz_class& c) const {
  if (c == 0) return Poly();
  Poly r;
  r.t.reserve(t.size());
  for (const auto& tm : t) r.t.push_back({expo_add(tm.e, e), tm.c * c});
  return r;
}

Poly Poly::mul_int(const mpz_class& c) const { return mul_term(Expo{}, c); }

mpz_class Poly::int_content() const {
  mpz_class g = 0;
  for (const auto& tm : t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly poly_divexact(const Poly& p, const Poly& d) {
  assert(!d.is_zero() && "division by zero polynomial");
  if (p.is_zero()) return Poly();
  if (d.is_one()) return p;
  // Fast path: single-term divisor.
  if (d.t.size() == 1) {
    Poly r;
    r.t.reserve(p.t.size());
    for (const auto& tm : p.t) {
      assert(expo_geq(tm.e, d.t[0].e) && "inexact monomial division");
      mpz_class q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), tm.c.get_mpz_t(),
                  d.t[0].c.get_mpz_t());
      assert(rem == 0 && "inexact coefficient division");
      r.t.push_back({expo_sub(tm.e, d.t[0].e), q});
    }
    return r;
  }
  Poly rem = p, quot;
  while (!rem.is_zero()) {
    const Term& lr = rem.lead();
    const Term& ld = d.lead();
    assert(expo_geq(lr.e, ld.e) && "inexact division (exponents)");
    mpz_class qc, qr;
    mpz_tdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), lr.c.get_mpz_t(),
                ld.c.get_mpz_t());
    assert(qr == 0 && "inexact division (coefficients)");
    Expo qe = expo_sub(lr.e, ld.e);
    quot = quot + Poly::mono(qe, qc);
    rem = rem - d.mul_term(qe, qc);
  }
  return quot;
}

std::vector<Poly> univar_coeffs(const Poly& p, int var) {
  std::vector<Poly> cs(static_cast<size_t>(p.deg_in(var)) + 1);
  for (const auto& tm : p.t) {
    Expo e = tm.e;
    int k = e[var];
    e[var] = 0;
    cs[static_cast<size_t>(k)] = cs[static_cast<size_t>(k)] + Poly::mono(e, tm.c);
  }
  return cs;
}

Poly from_univar(const std::vector<Poly>& cs, int var) {
  Poly r;
  Expo shift{};
  for (size_t k = 0; k < cs.size(); ++k) {
    shift[var] = static_cast<int16_t>(k);
    r = r + cs[k].mul_term(shift, 1);
  }
  return r;
}

namespace {

// Sign-normalize: positive grlex-leading coefficient.
Poly lead_pos(Poly p) {
  if (!p.is_zero() && p.lead().c < 0) return -p;
  return p;
}

int pick_var(const Poly& A, const Poly& B) {
  for (int i = NV - 1; i >= 0; --i)
    if (A.deg_in(i) > 0 || B.deg_in(i) > 0) return i;
  return -1;
}

int deg_vec(const std::vector<Poly>& cs) {
  for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k)
    if (!cs[k].is_zero()) return k;
  return -1;
}

// gcd of the coefficient list (the content w.r.t. the chosen variable).
Poly content_of(const std::vector<Poly>& cs) {
  Poly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? lead_pos(c) : poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

std::vector<Poly> divexact_vec(const std::vector<Poly>& cs, const Poly& d) {
  std::vector<Poly> out(cs.size());
  for (size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) out[i] = poly_divexact(cs[i], d);
  return out;
}

// Pseudo-remainder of univariate views (coefficients premultiplied by powers
// of lc(B) so every division is exact).
std::vector<Poly> prem_vec(std::vector<Poly> R, const std::vector<Poly>& B) {
  int db = deg_vec(B);
  const Poly& lb = B[static_cast<size_t>(db)];
  int dr = deg_vec(R);
  while (dr >= db && dr >= 0) {
    Poly lr = R[static_cast<size_t>(dr)];
    std::vector<Poly> nxt(static_cast<size_t>(dr), Poly());
    // nxt = lb*R - lr*x^{dr-db}*B, degree drops below dr
    for (int k = 0; k < dr; ++k) {
      Poly term = R[static_cast<size_t>(k)] * lb;
      int j = k - (dr - db);
      if (j >= 0 && j <= db) term = term - lr * B[static_cast<size_t>(j)];
      nxt[static_cast<size_t>(k)] = term;
    }
    R = std::move(nxt);
    dr = deg_vec(R);
  }
  return R;
}

// gcd of primitive polynomials (integer-content 1, positive lead).
Poly gcd_primitive(const Poly& A, const Poly& B);

Poly gcd_dispatch(Poly A, Poly B) {
  if (A.is_zero()) return lead_pos(B);
  if (B.is_zero()) return lead_pos(A);
  // Monomial fast path: gcd(mono, P) = common monomial part * integer gcd.
  if (A.t.size() == 1 || B.t.size() == 1) {
    const Poly& m = (A.t.size() == 1) ? A : B;
    const Poly& p = (A.t.size() == 1) ? B : A;
    Expo ge = m.t[0].e;
    for (const auto& tm : p.t)
      for (int i = 0; i < NV; ++i) ge[i] = std::min(ge[i], tm.e[i]);
    mpz_class gc = p.int_content();
    mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), m.t[0].c.get_mpz_t());
    return Poly::mono(ge, gc);
  }
  mpz_class ca = A.int_content(), cb = B.int_content();
  mpz_class ic;
  mpz_gcd(ic.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly Ap = lead_pos(poly_divexact(A, Poly::from_mpz(ca)));
  Poly Bp = lead_pos(poly_divexact(B, Poly::from_mpz(cb)));
  Poly G = gcd_primitive(Ap, Bp);
  return G.mul_int(ic);
}

Poly gcd_primitive(const Poly& A, const Poly& B) {
  if (A == B) return A;
  int x = pick_var(A, B);
  if (x < 0) return Poly::from_int(1);  // both are +-1
  if (A.deg_in(x) == 0 || B.deg_in(x) == 0) {
    // One argument is free of x: gcd divides the x-content of the other.
    const Poly& free = (A.deg_in(x) == 0) ? A : B;
    const Poly& other = (A.deg_in(x) == 0) ? B : A;
    Poly cont = content_of(univar_coeffs(other, x));
    return gcd_dispatch(free, cont);
  }
  auto uA = univar_coeffs(A, x);
  auto uB = univar_coeffs(B, x);
  Poly contA = content_of(uA), contB = content_of(uB);
  Poly c = gcd_dispatch(contA, contB);
  std::vector<Poly> P0 = divexact_vec(uA, contA);
  std::vector<Poly> P1 = divexact_vec(uB, contB);
  if (deg_vec(P0) < deg_vec(P1)) std::swap(P0, P1);
  while (true) {
    int d1 = deg_vec(P1);
    if (d1 < 0) break;  // gcd of the x-parts is P0
    std::vector<Poly> R = prem_vec(P0, P1);
    P0 = std::move(P1);
    if (deg_vec(R) < 0) {
      P1 = std::move(R);
      continue;
    }
    Poly cr = content_of(R);
    P1 = divexact_vec(R, cr);
    // keep leads positive for determinism
    int dr = deg_vec(P1);
    if (dr >= 0 && P1[static_cast<size_t>(dr)].lead().c < 0)
      for (auto& q : P1) q = -q;
  }
  Poly G = from_univar(P0, x);
  if (G.deg_in(x) == 0) return lead_pos(c);  // coprime in x
  return lead_pos(c * G);
}

}  // namespace

Poly poly_gcd(Poly A, Poly B) { return gcd_dispatch(std::move(A), std::move(B)); }

std::string Poly::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& tm : t) {
    mpz_class c = tm.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? "-" : "+");
      if (c < 0) c = -c;
    }
    first = false;
    bool unit_coeff = (c == 1);
    bool any_var = false;
    for (int i = 0; i < NV; ++i) any_var = any_var || tm.e[i] != 0;
    if (!unit_coeff || !any_var) os << c.get_str();
    bool need_star = !unit_coeff || !any_var;
    for (int i = 0; i < NV; ++i) {
      if (tm.e[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << VAR_NAMES[i];
      if (tm.e[i] != 1) os << "^" << tm.e[i];
    }
  }
  return os.str();
}

}  // namespace qloop
