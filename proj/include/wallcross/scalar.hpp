#pragma once

#include <map>
#include <string>
#include <vector>

#include "wallcross/cyclo.hpp"
#include "wallcross/numeric.hpp"

namespace wallcross {

// Variables with rational exponents over Q(zeta_M). All values produced in
// one session share a context so representations stay directly comparable.
struct ScalarContext {
  CycloContext cyclo;
  std::vector<std::string> vars;

  ScalarContext(long order, std::vector<std::string> names)
      : cyclo(order), vars(std::move(names)) {}
  int nvars() const { return int(vars.size()); }
};

// Finite sum of monomials x^e, e in Q^nvars, coefficients in Q(zeta_M).
// Zero coefficients are never stored; the map key order is lexicographic.
struct LaurentPoly {
  const ScalarContext* ctx = nullptr;
  std::map<RatVec, CycloNum> terms;

  LaurentPoly() = default;
  explicit LaurentPoly(const ScalarContext& cx) : ctx(&cx) {}
  LaurentPoly(const ScalarContext& cx, const Rat& value);
  static LaurentPoly monomial(const ScalarContext& cx, const RatVec& exps,
                              const CycloNum& coef);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  void add_term(const RatVec& exps, const CycloNum& coef);

  bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  std::string str() const;
};

// Fraction num/den of Laurent polynomials, den != 0. Kept in the normal form
// where den's lex-leading coefficient is 1 and its lex-least exponent is 0;
// exact divisions are detected so unit-like ratios collapse to polynomials.
struct Scalar {
  const ScalarContext* ctx = nullptr;
  LaurentPoly num, den;

  Scalar() = default;
  Scalar(const ScalarContext& cx, const Rat& value);
  Scalar(LaurentPoly n, LaurentPoly d);
  explicit Scalar(LaurentPoly n);

  static Scalar zero(const ScalarContext& cx) { return Scalar(cx, Rat(0)); }
  static Scalar one(const ScalarContext& cx) { return Scalar(cx, Rat(1)); }

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const Scalar& o) const;  // cross-multiplied comparison
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  // zeta -> zeta^a on every coefficient; variables are fixed.
  Scalar galois_conjugate(long a) const;

  std::string str() const;
};

// A root of unity times a monomial in the context variables: the value shape
// of any line bundle restricted to a point with finite stabilizer.
struct UnitValue {
  Rat root;     // e(root) = exp(2*pi*i*root), kept in [0, 1)
  RatVec exps;  // exponents of the context variables

  UnitValue() = default;
  UnitValue(Rat r, RatVec e) : root(rat_frac(r)), exps(std::move(e)) {}
  static UnitValue one(int nvars) { return UnitValue(Rat(0), RatVec(nvars, Rat(0))); }

  bool operator==(const UnitValue& o) const { return root == o.root && exps == o.exps; }
  bool operator!=(const UnitValue& o) const { return !(*this == o); }

  UnitValue operator*(const UnitValue& o) const;
  UnitValue inverse() const;
  UnitValue pow(const Int& k) const;
  // The principal branch: roots stay in [0, 1/l), exponents divide by l.
  UnitValue principal_root(long l) const;

  Scalar to_scalar(const ScalarContext& cx) const;
};

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Gaussian elimination over the fraction field; throws on singular systems.
std::vector<Scalar> scalar_solve(ScalarMatrix a, std::vector<Scalar> b);
Scalar scalar_det(ScalarMatrix a);

}  // namespace wallcross
