#pragma once

#include <string>
#include <vector>

#include "wallcross/numeric.hpp"

namespace wallcross {

// Arithmetic in the cyclotomic field Q(zeta_M), zeta_M = exp(2*pi*i/M).
// Elements are stored on the power basis 1, zeta, ..., zeta^(phi(M)-1).
struct CycloContext {
  long order = 1;            // M
  int degree = 1;            // phi(M)
  std::vector<Int> minpoly;  // Phi_M, monic, size degree+1
  // zeta^e on the power basis for e in [0, M).
  std::vector<std::vector<Rat>> zeta_pow;

  explicit CycloContext(long m);
};

struct CycloNum {
  const CycloContext* ctx = nullptr;
  std::vector<Rat> c;  // size ctx->degree

  CycloNum() = default;
  CycloNum(const CycloContext& cx, const Rat& value);

  bool is_zero() const;
  bool is_rational() const;  // lies in Q
  const Rat& rational_part() const { return c[0]; }

  bool operator==(const CycloNum& o) const { return c == o.c; }
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  CycloNum operator-() const;
  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  CycloNum inverse() const;  // element must be nonzero
  CycloNum operator/(const CycloNum& o) const { return *this * o.inverse(); }

  // Canonical print form: polynomial in z = zeta_M, highest power first.
  std::string str() const;
};

// exp(2*pi*i*q); q must have denominator dividing the context order.
CycloNum root_of_unity(const CycloContext& cx, const Rat& q);

// Galois action zeta -> zeta^a; requires gcd(a, M) = 1.
CycloNum galois(const CycloNum& x, long a);

}  // namespace wallcross
