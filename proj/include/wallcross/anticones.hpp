#pragma once

#include <cstdint>
#include <vector>

#include "wallcross/gitdata.hpp"

namespace wallcross {

// Exact feasibility of a system of linear equalities and strict/weak
// inequalities with rational coefficients and eps-extended rational right-hand
// sides, decided by equality substitution followed by Fourier-Motzkin
// elimination. Feasibility is over the ordered field Q(eps), eps a positive
// infinitesimal; combinations only ever scale rows by positive rationals, so
// right-hand sides stay linear in eps.
class LinearSystem {
 public:
  explicit LinearSystem(int nvars) : nvars_(nvars) {}

  void add_eq(const RatVec& coeffs, const EpsRat& rhs) { rows_.push_back({coeffs, rhs, EQ}); }
  void add_ge(const RatVec& coeffs, const EpsRat& rhs) { rows_.push_back({coeffs, rhs, GE}); }
  void add_gt(const RatVec& coeffs, const EpsRat& rhs) { rows_.push_back({coeffs, rhs, GT}); }

  bool feasible() const;

 private:
  enum Rel { EQ, GE, GT };
  struct Row {
    RatVec c;
    EpsRat rhs;
    Rel rel;
  };
  int nvars_;
  std::vector<Row> rows_;
};

// Is theta in the angle of I, i.e. a strictly positive rational combination of
// the characters indexed by I (the empty angle is {0})? Indices 0-based.
bool angle_contains(const CharData& chars, const std::vector<int>& idx, const StabilityVector& theta);

// Anticone family of a generic stability, stored by its minimal members
// (bitmasks over the N slots); membership of any index set is containment of
// some minimal member. For generic theta every minimal anticone has exactly
// rank-many linearly independent characters.
struct AnticoneSet {
  int n_slots = 0;
  std::vector<uint32_t> minimal;  // sorted

  bool contains(uint32_t mask) const {
    for (uint32_t m : minimal)
      if ((m & mask) == m) return true;
    return false;
  }
  bool contains(const std::vector<int>& idx) const {
    uint32_t mask = 0;
    for (int i : idx) mask |= uint32_t(1) << i;
    return contains(mask);
  }
  std::vector<std::vector<int>> minimal_sets() const;
  bool operator==(const AnticoneSet& o) const {
    return n_slots == o.n_slots && minimal == o.minimal;
  }
};

// Throws NonGenericTheta when theta lies in the angle of a rank-deficient set.
AnticoneSet anticone_set(const CharData& chars, const StabilityVector& theta);

// Slots contained in every minimal anticone, i.e. whose deletion leaves no
// anticone; these are the fan-theoretically extended slots at theta. 0-based.
std::vector<int> extended_set(const CharData& chars, const StabilityVector& theta);

}  // namespace wallcross
