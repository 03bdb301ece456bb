#pragma once

#include "wallcross/anticones.hpp"
#include "wallcross/gitdata.hpp"

namespace wallcross {

// A single wall crossing between adjacent generic chambers.
struct WallCrossingData {
  IntVec e;                      // primitive wall normal, <theta+, e> > 0 > <theta-, e>
  std::vector<int> m_plus;       // slots with <D_i, e> > 0 (0-based)
  std::vector<int> m_minus;      // slots with <D_i, e> < 0
  std::vector<int> m_zero;       // slots on the wall
  RatVec theta_zero;             // barycenter of the shared facet's extremal rays
  IntMatrix wall_basis;          // rank x (rank-1); columns: HNF basis of e-perp in the character lattice
  AnticoneSet aplus, aminus;
};

// Throws SameChamber when the two stabilities share a chamber, NotAdjacent
// when the chamber closures do not meet in a facet, NonGenericTheta when a
// stability sits on a wall.
WallCrossingData wall_crossing(const GitData& g, const RatVec& theta_plus, const RatVec& theta_minus);

// Common-blowup datum over the crossing: rank r+1, one extra slot whose
// character is the new coordinate axis and whose twist vanishes. Not a
// Lawrence datum (the pairing is intentionally broken by the e-dependent
// lifts); only CharData-level machinery applies to it.
struct TildeGitData {
  CharData chars;
  StabilityVector theta_tilde;   // (theta_zero, -eps)
  RatVec theta_tilde_plus;       // (theta_plus, 1)
  RatVec theta_tilde_minus;      // (theta_minus, 1)
};

TildeGitData tilde_data(const GitData& g, const WallCrossingData& wc, const RatVec& theta_plus,
                        const RatVec& theta_minus);

}  // namespace wallcross
