#pragma once

#include <memory>
#include <vector>

#include "wallcross/gitdata.hpp"
#include "wallcross/scalar.hpp"
#include "wallcross/stackgeom.hpp"

namespace wallcross {

// Side tags keep classes from different quotients apart.
inline constexpr int kSidePlus = 0;
inline constexpr int kSideMinus = 1;
inline constexpr int kSideBlowup = 2;

// A character p of the quotient torus together with a formal integer
// combination of the flavor weights (lambda_1..lambda_m, lambda_h last).
struct LineBundleSymbol {
  IntVec p;
  TwistVec twist;
};

LineBundleSymbol line_bundle(const CharData& cd, const IntVec& p);  // twist 0
LineBundleSymbol r_symbol(const CharData& cd, int i);               // coordinate bundle
LineBundleSymbol s_symbol(const CharData& cd, int i);               // its inverse
LineBundleSymbol hbar_symbol(const CharData& cd);
LineBundleSymbol symbol_product(const LineBundleSymbol& a, const LineBundleSymbol& b);
LineBundleSymbol symbol_inverse(const LineBundleSymbol& a);

// Everything needed to restrict classes on one side: the characters, the
// fixed-point atlas, and the shared scalar field.
struct KModel {
  std::shared_ptr<const ScalarContext> scalars;
  CharData chars;
  FixedPointAtlas atlas;
  int side = kSidePlus;

  int points() const { return int(atlas.inertia.size()); }
};

KModel make_kmodel(std::shared_ptr<const ScalarContext> scalars, const CharData& chars,
                   const StabilityVector& theta, int side);

// lcm of the isotropy orders; the scalar field order must be a multiple of it.
long lcm_iso_orders(const FixedPointAtlas& atlas);

// Smallest workable cyclotomic order for a standalone model on one side.
long session_order(const FixedPointAtlas& atlas);

// Standard variable names L1..Lm, Lh for the multiplicative weights.
std::vector<std::string> lambda_variable_names(const CharData& cd);

// Restriction of a line bundle symbol at one inertia point: with c solving
// p = sum_{j in delta} c_j D_j, the value is
//   e(<p, ghat>) * L^twist * prod_j L^{-c_j * twist_j},
// a root of unity times a monomial. The convention makes restrict(R_i) = 1
// for i in delta.
UnitValue restrict_unit(const KModel& m, const LineBundleSymbol& sym, int inertia_idx);

// A class in the localized model: one scalar per inertia point.
struct KClass {
  int side = kSidePlus;
  std::vector<Scalar> values;

  KClass() = default;
  KClass(int s, std::vector<Scalar> v) : side(s), values(std::move(v)) {}

  KClass operator+(const KClass& o) const;
  KClass operator-(const KClass& o) const;
  KClass operator*(const KClass& o) const;
  KClass operator*(const Scalar& s) const;
  bool operator==(const KClass& o) const;
  bool operator!=(const KClass& o) const { return !(*this == o); }
  bool is_zero() const;
};

KClass kclass(const KModel& m, const LineBundleSymbol& sym);
KClass kclass_one(const KModel& m);
KClass kclass_zero(const KModel& m);

// e_{delta,rho} = L(rho_hat) * prod_{i not in delta} (1 - S_i), one class per
// (fixed point, character lift). Nonzero only on its own block.
struct StructureBasisClass {
  int point = 0;  // index into atlas.points
  int rho = 0;    // index into that point's char_lifts
  IntVec rho_hat;
  KClass cls;
};

std::vector<StructureBasisClass> structure_basis(const KModel& m);

// Same class with a custom character lift (for lift-dependence experiments).
KClass structure_class_with_lift(const KModel& m, int point, const IntVec& rho_hat);

// Pointwise ring checks: coordinate pairs multiply to hbar, products over sets
// whose complement is not an anticone vanish everywhere, restriction of R_i is
// 1 on its own anticone, and the per-block basis matrices are invertible.
std::vector<ValidationCheck> verify_relations(const GitData& g, const RatVec& theta);

}  // namespace wallcross
