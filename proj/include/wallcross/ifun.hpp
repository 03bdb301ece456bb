#pragma once

#include <string>
#include <vector>

#include "wallcross/gitdata.hpp"
#include "wallcross/scalar.hpp"
#include "wallcross/stackgeom.hpp"
#include "wallcross/wallcrossing.hpp"

namespace wallcross {

// A curve degree d in L (x) Q with every character pairing cached.
struct RationalDegree {
  RatVec d;         // length rank
  RatVec pairings;  // length N, entry i = <D_i, d>

  bool operator==(const RationalDegree& o) const { return d == o.d; }
};

RationalDegree rational_degree(const GitData& g, const RatVec& d);

// All degrees on the (1/M)-grid with every |<D_i, d>| <= bound whose
// integrality set {i : <D_i, d> in Z} is an anticone of theta; M is the lcm of
// the fixed-point isotropy orders at theta. Sorted lexicographically by
// pairings. Throws NonGenericTheta when theta lies on a wall.
std::vector<RationalDegree> enumerate_degrees(const GitData& g, const RatVec& theta,
                                              const Rat& bound);

// Surviving finite block of the slot-j factor
//   prod_{<a>=<v>, a<=0}(u_j + a z) / prod_{<a>=<v>, a<=v}(u_j + a z),
// v = <D_j, d>: denominator factors a in (0, v] when v > 0, numerator factors
// a in (v, 0] when v < 0, the empty block when v = 0.
struct HypFactor {
  int slot = 0;              // 0-based
  bool denominator = false;  // true when the block divides the term
  std::vector<Rat> shifts;   // surviving a-values, ascending

  bool operator==(const HypFactor& o) const {
    return slot == o.slot && denominator == o.denominator && shifts == o.shifts;
  }
};

HypFactor hyperg_factor(const RationalDegree& d, int slot);

// Twisted-sector label of a term: per-slot fractional parts, compared against
// the inertia labels of the fixed-point atlas.
struct SectorLabel {
  RatVec fractions;  // length N, entries in [0, 1)
  Rat age;           // sum of fractions over the non-extended slots
};

// Exponent of y_i is <basis[i], d>.
RatVec monomial_exponents(const std::vector<IntVec>& basis, const RatVec& d);

struct ISeriesTerm {
  RationalDegree degree;
  RatVec y_exps;                   // degree coordinates in the side's ordered basis
  RatVec x_exps;                   // pairings at the side's extended slots
  std::vector<HypFactor> factors;  // slots with nonempty blocks, ascending
  SectorLabel sector;

  std::string str() const;  // diagnostic display, slots 1-based
};

// Wall-adapted ordered bases of the character lattice: the first r-1 vectors
// are the shared HNF basis of the wall lattice, the last one pairs to +1
// (plus side) or -1 (minus side) with the wall normal and is box-reduced
// modulo the wall lattice. The coordinate change between the sides is
//   ytilde_i = y_i * y_r^{ci[i]} (i < r),  ytilde_r = y_r^{-c},
// equivalently basis_plus[r-1] = sum_i ci[i] * wall_i - c * basis_minus[r-1].
struct ModuliChartTransition {
  IntVec e;  // wall normal, <theta_plus, e> > 0
  std::vector<IntVec> basis_plus;
  std::vector<IntVec> basis_minus;
  RatVec c_i;  // r-1 entries
  Rat c;       // > 0
};

ModuliChartTransition chart_transition(const WallCrossingData& wc);

// Symbolic record of the e^{sigma/z} prefactor: sigma = sum_i theta(p_i)
// log(y_i) + c_0, with theta(p_i) stored as the coefficient row t of a
// presentation p_i = sum_j t_j D_j, so theta(p_i) = sum_j t_j (u_j - lambda_j).
// c_0 is an opaque constant symbol and contributes nothing to any value.
struct SigmaRecord {
  std::vector<RatVec> theta_rows;  // rank rows of length N
  std::string c0 = "c_0";
};

struct ISeries {
  int side = 1;  // +1 / -1: the chart chamber containing theta
  Rat bound;
  bool sector_sign_flipped = false;
  std::vector<int> extended;    // fan-extended slots at theta, 0-based
  std::vector<IntVec> basis;    // the side's ordered basis from the chart
  SigmaRecord sigma;
  std::vector<ISeriesTerm> terms;  // one per enumerated degree, pairing-lex order
};

// Truncated series: one term per enumerated degree with pairing bound `bound`.
// The e^{sigma/z} prefactor stays symbolic on the record; the side is read off
// the sign of <theta, e>. Sector labels are the fractional parts of -<D_i, d>
// by default; the flag flips the sign.
ISeries i_series(const GitData& g, const RatVec& theta, const Rat& bound,
                 const ModuliChartTransition& chart, bool flip_sector_sign = false);

// Weight variables for restriction values: the lambda names, then "z".
ScalarContext restriction_context(const GitData& g);

// Factor product of a term at the fixed point delta: u_j restricts to 0 for
// j in delta or j extended, and otherwise to the linear form
// twist_j - sum_{i in delta} c_i twist_i with c solving D_j = sum c_i D_i;
// a block factor contributes u_j| + a z. The moduli monomial is not part of
// the value.
Scalar restrict_factors(const GitData& g, const ISeriesTerm& term,
                        const std::vector<int>& extended, const std::vector<int>& delta,
                        const ScalarContext& cx);

// Sector-gated restriction at an inertia point of the side's atlas: throws
// SectorMismatch unless the point label equals the term's sector fractions.
Scalar restrict_term(const GitData& g, const ISeriesTerm& term, const std::vector<int>& extended,
                     const FixedPointAtlas& atlas, int inertia, const ScalarContext& cx);

}  // namespace wallcross
