#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallcross {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division rounding toward -inf, exact.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int rat_floor(const Rat& q) { return fdiv(q.get_num(), q.get_den()); }

// Fractional part <q> in [0,1).
inline Rat rat_frac(const Rat& q) {
  Rat f = q - Rat(rat_floor(q));
  return f;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q"; rejects anything else.
Rat parse_rat(const std::string& s);

// q^k for integer k (k may be negative; q must be nonzero then).
inline Rat rat_pow(const Rat& q, long k) {
  if (k == 0) return Rat(1);
  Rat base = q;
  bool neg = k < 0;
  unsigned long e = neg ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Rat acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  if (neg) {
    if (acc == 0) throw std::domain_error("rat_pow: zero to negative power");
    acc = 1 / acc;
  }
  return acc;
}

// Rational plus a formal positive infinitesimal: a + b*eps, ordered
// lexicographically. Closed under addition and multiplication by Rat,
// which is all the chamber machinery needs (linear solves keep eps-degree 1).
struct EpsRat {
  Rat a;
  Rat b;

  EpsRat() : a(0), b(0) {}
  EpsRat(const Rat& a0) : a(a0), b(0) {}
  EpsRat(const Rat& a0, const Rat& b0) : a(a0), b(b0) {}

  static EpsRat eps() { return EpsRat(Rat(0), Rat(1)); }

  EpsRat operator-() const { return EpsRat(-a, -b); }
  EpsRat operator+(const EpsRat& o) const { return EpsRat(a + o.a, b + o.b); }
  EpsRat operator-(const EpsRat& o) const { return EpsRat(a - o.a, b - o.b); }
  EpsRat& operator+=(const EpsRat& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  EpsRat& operator-=(const EpsRat& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend EpsRat operator*(const Rat& c, const EpsRat& x) { return EpsRat(c * x.a, c * x.b); }
  friend EpsRat operator*(const EpsRat& x, const Rat& c) { return c * x; }
  EpsRat operator/(const Rat& c) const { return EpsRat(a / c, b / c); }

  bool operator==(const EpsRat& o) const { return a == o.a && b == o.b; }
  bool operator!=(const EpsRat& o) const { return !(*this == o); }
  bool operator<(const EpsRat& o) const { return a < o.a || (a == o.a && b < o.b); }
  bool operator>(const EpsRat& o) const { return o < *this; }
  bool operator<=(const EpsRat& o) const { return !(o < *this); }
  bool operator>=(const EpsRat& o) const { return !(*this < o); }

  bool is_zero() const { return a == 0 && b == 0; }
  int sign() const {
    if (a != 0) return a < 0 ? -1 : 1;
    if (b != 0) return b < 0 ? -1 : 1;
    return 0;
  }
  std::string str() const {
    if (b == 0) return a.get_str();
    return a.get_str() + (b > 0 ? "+" : "") + b.get_str() + "*eps";
  }
};

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;
using EpsVec = std::vector<EpsRat>;

inline Rat dot(const RatVec& x, const RatVec& y) {
  Rat s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace wallcross
