#pragma once

#include <string>
#include <vector>

#include "wallcross/fgab.hpp"
#include "wallcross/numeric.hpp"

namespace wallcross {

// Integer coefficient vector over the torus weight symbols
// (lambda_1, ..., lambda_m, lambda_h); the last slot is the lambda_h coefficient.
using TwistVec = IntVec;

// Character data of a torus quotient presentation: N characters of a rank-r
// lattice, one coordinate line bundle twist per slot. This is the part of a
// GIT datum that the chamber / fixed-point / restriction machinery consumes;
// the blowup datum produced by a wall crossing is CharData-shaped but carries
// no Lawrence pairing.
struct CharData {
  int rank = 0;
  int lambda_count = 0;                // m; twists have length m+1
  std::vector<IntVec> characters;      // N rows of length rank
  std::vector<TwistVec> twists;        // N rows of length m+1

  int count() const { return int(characters.size()); }
  IntMatrix char_matrix() const { return IntMatrix::from_rows(characters); }
  Rat pair(int i, const RatVec& x) const {  // <D_i, x>
    Rat s(0);
    for (int k = 0; k < rank; ++k) s += Rat(characters[i][k]) * x[k];
    return s;
  }
};

// Lawrence GIT datum: K = (C*)^r acting on T*C^n x C^{ext} through N = 2n + ext
// characters with D_{n+i} = -D_i for i = 1..n. Slot order: 1..n, their Lawrence
// partners n+1..2n, then the extended slots.
struct GitData {
  int rank = 0;
  int n = 0;
  int ext_count = 0;
  CharData chars;

  int count() const { return chars.count(); }

  // Builds the datum from the full character list (length 2n + ext), assigning
  // the standard twists: slot i < n gets lambda_{i+1}; its partner gets
  // lambda_h - lambda_{i+1}; extended slot j gets lambda_{n+j+1}.
  static GitData make(int rank, int n, const std::vector<IntVec>& characters);
};

using StabilityVector = EpsVec;

inline StabilityVector stability(const RatVec& theta) {
  StabilityVector s;
  s.reserve(theta.size());
  for (const Rat& q : theta) s.emplace_back(q);
  return s;
}

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Structural checks (Lawrence pairing, Calabi-Yau sum, characters span) plus
// the chamber conditions at theta (genericity, full set is an anticone, all
// anticones span). Never throws; failures are reported.
ValidationReport validate(const GitData& g, const RatVec& theta);

}  // namespace wallcross
