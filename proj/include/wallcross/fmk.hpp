#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "wallcross/eqk.hpp"
#include "wallcross/wallcrossing.hpp"

namespace wallcross {

// How one minus-side fixed point crosses the wall. An anticone that is also a
// plus-side anticone maps over verbatim; otherwise it contains exactly one
// slot whose pairing with the wall normal is negative, and the transform
// averages over the l-th roots attached to that slot.
struct CrossingCase {
  bool shared = false;
  int plus_point = -1;  // shared: index of the identical plus-side fixed point
  int j_minus = -1;     // flopped: the unique slot in delta with <D_j, e> < 0
  long l = 0;           // flopped: -<D_{j_minus}, e>
};

struct BasisLabel {
  int point = 0;  // fixed-point index on the relevant side
  int rho = 0;    // character index inside that point's isotropy dual

  bool operator==(const BasisLabel& o) const { return point == o.point && rho == o.rho; }
};

// Matrix of a transform in the structure bases: rows are plus-side basis
// classes, columns minus-side.
struct FMMatrix {
  std::vector<BasisLabel> rows, cols;
  ScalarMatrix entries;

  bool is_identity() const;
};

FMMatrix fm_compose(const FMMatrix& outer, const FMMatrix& inner);
Scalar fm_det(const FMMatrix& m);

// One wall crossing with everything derived from it: both localized models
// over one shared scalar field, the structure bases, and the per-point case
// analysis. For the trivial loop (both stabilities in one chamber) there is
// no wall datum and every case is shared.
struct CrossingContext {
  GitData g;
  RatVec theta_plus, theta_minus;
  std::optional<WallCrossingData> wc;
  std::optional<TildeGitData> tilde;
  long session = 1;  // cyclotomic order of the scalar field
  std::shared_ptr<const ScalarContext> scalars;
  KModel plus, minus;
  FixedPointAtlas tilde_atlas;  // empty for the trivial loop
  std::vector<StructureBasisClass> basis_plus, basis_minus;
  std::vector<CrossingCase> cases;  // indexed by minus-side fixed point
};

// Builds the context. When a scalar field is supplied (so two crossings can
// share one field) its order must be a multiple of the session order computed
// here; the session order already covers the reversed crossing, so a context
// and its reversal are always compatible.
CrossingContext make_crossing(const GitData& g, const RatVec& theta_plus, const RatVec& theta_minus,
                              std::shared_ptr<const ScalarContext> scalars = nullptr);

// Both stabilities equal: the identity "crossing" used as a monodromy control.
CrossingContext make_trivial_loop(const GitData& g, const RatVec& theta);

// Image of the minus-side class e_{delta,rho_hat} as a plus-side class.
// branch shifts every principal l-th root by zeta_l^branch; the full average
// is branch-independent and the tests pin that down bit for bit.
KClass fm_transform_with_lift(const CrossingContext& ctx, int minus_point, const IntVec& rho_hat,
                              long branch = 0);

// Same with the canonical character lift of basis column (minus_point, rho).
KClass fm_transform(const CrossingContext& ctx, int minus_point, int rho);

// Full matrix: every column is an fm_transform image solved against the
// plus-side basis block by block, then re-verified against the whole tuple.
FMMatrix fm_matrix(const CrossingContext& ctx);

// The crossing matrix, the matrix of the reversed crossing over the same
// scalar field, and their composition: the loop minus -> plus -> minus.
// det(loop) is best taken as fm_det(reverse) * fm_det(forward); eliminating
// the composed matrix directly repeats every cancellation at quadratic size.
struct MonodromyData {
  FMMatrix forward, reverse, loop;
};

MonodromyData monodromy_data(const CrossingContext& ctx);
FMMatrix monodromy(const CrossingContext& ctx);  // just the loop

// Independent check of the transform through the common blowup: pulls the
// class back along the minus-side correspondence and pushes forward with the
// exact Euler-class ratio. Only defined when both quotients and the blowup
// are free (all isotropy trivial) and every flopped case has l = 1; otherwise
// throws OrbifoldUnsupported.
KClass localization_oracle(const CrossingContext& ctx, const KClass& e_minus);

// True when v lies in the base scalar field: coefficients in Q(zeta_b) and
// variable exponents with denominator dividing b. Checked by invariance under
// the coefficient conjugations fixing zeta_b and under the Kummer twists
// multiplying each variable monomial by e(b * exponent). Transform outputs
// must land here even though the intermediate root extensions do not.
bool in_base_field(const Scalar& v, long base_order);

}  // namespace wallcross
