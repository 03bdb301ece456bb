#pragma once

#include "wallcross/anticones.hpp"
#include "wallcross/gitdata.hpp"

namespace wallcross {

// The target group N of the quotient presentation together with the images
// b_i = beta(e_i), written in the invariant-factor presentation produced by
// cokernel (free coordinates first, then torsion coordinates).
CokernelData reconstruct_beta(const GitData& g);

struct StackyFanData {
  FgAbelianGroup target;
  IntMatrix beta;                            // coord_count x N, column i = b_i
  std::vector<std::vector<int>> top_cones;   // complements of minimal anticones, sorted
  std::vector<int> extended;                 // fan-theoretic extended slots, 0-based
  std::vector<bool> extended_in_support;     // exact membership of b-bar_i in the fan support
};

StackyFanData stacky_fan(const GitData& g, const RatVec& theta);

struct HypertoricIdealData {
  IntMatrix reduced_basis;  // rank x k: HNF basis of the reduced lattice
                            // {x : <D_j, x> = 0 for every declared extended j}
  IntMatrix coefficients;   // k x n: row b gives the generator
                            // sum_i coefficients[b][i] z_i w_i
};

HypertoricIdealData hypertoric_ideal(const GitData& g);

struct FixedPoint {
  std::vector<int> delta;          // minimal anticone, ascending
  Int iso_order;                   // |G_delta| = |det(D_j)_{j in delta}|
  FgAbelianGroup iso;              // isotropy group structure
  std::vector<IntVec> char_lifts;  // canonical character lifts in the dual lattice, sorted
  std::vector<RatVec> elements;    // group element lifts with coordinates in [0,1), sorted
};

// One point of the inertia stack: a fixed point together with an isotropy
// element; label_i = <D_i . ghat> mod 1 drives sector matching.
struct InertiaPoint {
  int point = 0;  // index into FixedPointAtlas::points
  int elem = 0;   // index into that point's elements
  RatVec label;
};

struct FixedPointAtlas {
  std::vector<FixedPoint> points;
  std::vector<InertiaPoint> inertia;  // flattened in atlas order

  Int iso_order_sum() const {
    Int s(0);
    for (auto& p : points) s += p.iso_order;
    return s;
  }
  int inertia_index(int point, int elem) const;
};

// Fixed points of a generic stability on CharData (applies to both the
// Lawrence datum and the blowup datum).
FixedPointAtlas fixed_points(const CharData& chars, const StabilityVector& theta);

}  // namespace wallcross
