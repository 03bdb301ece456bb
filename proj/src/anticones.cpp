#include "wallcross/anticones.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace wallcross {

namespace {

// Scale a row by a positive factor so duplicates collapse; the relation is
// invariant under positive scaling.
void normalize_row(RatVec& c, EpsRat& rhs) {
  Rat scale(0);
  for (const Rat& q : c) scale = std::max(scale, rat_abs(q));
  if (scale == 0) scale = std::max(rat_abs(rhs.a), rat_abs(rhs.b));
  if (scale == 0) return;
  for (Rat& q : c) q /= scale;
  rhs = rhs / scale;
}

}  // namespace

bool LinearSystem::feasible() const {
  std::vector<Row> rows = rows_;

  // Equality substitution: use each equality with a live coefficient to
  // eliminate one variable from every other row.
  for (;;) {
    int pivot = -1, var = -1;
    for (int i = 0; i < int(rows.size()) && pivot < 0; ++i) {
      if (rows[i].rel != EQ) continue;
      for (int j = 0; j < nvars_; ++j)
        if (rows[i].c[j] != 0) {
          pivot = i;
          var = j;
          break;
        }
    }
    if (pivot < 0) break;
    Row p = rows[pivot];
    rows.erase(rows.begin() + pivot);
    for (Row& r : rows) {
      if (r.c[var] == 0) continue;
      Rat f = r.c[var] / p.c[var];
      for (int j = 0; j < nvars_; ++j) r.c[j] -= f * p.c[j];
      r.rhs -= f * p.rhs;
    }
  }
  // Leftover equalities are variable-free.
  for (auto it = rows.begin(); it != rows.end();) {
    if (it->rel == EQ) {
      if (!it->rhs.is_zero()) return false;
      it = rows.erase(it);
    } else {
      ++it;
    }
  }

  // Fourier-Motzkin elimination of the surviving inequality system c.x REL rhs
  // with REL in {>=, >}.
  std::vector<bool> live(nvars_, false);
  for (const Row& r : rows)
    for (int j = 0; j < nvars_; ++j)
      if (r.c[j] != 0) live[j] = true;

  auto compact = [&](std::vector<Row>& rs) {
    for (Row& r : rs) normalize_row(r.c, r.rhs);
    std::sort(rs.begin(), rs.end(), [](const Row& a, const Row& b) {
      if (a.c != b.c) return a.c < b.c;
      if (!(a.rhs == b.rhs)) return a.rhs < b.rhs;
      return a.rel < b.rel;
    });
    rs.erase(std::unique(rs.begin(), rs.end(),
                         [](const Row& a, const Row& b) {
                           return a.c == b.c && a.rhs == b.rhs && a.rel == b.rel;
                         }),
             rs.end());
  };
  compact(rows);

  for (int round = 0; round < nvars_; ++round) {
    // Pick the live variable minimizing the product of bound counts.
    int best = -1;
    long best_cost = 0;
    for (int j = 0; j < nvars_; ++j) {
      if (!live[j]) continue;
      long pos = 0, neg = 0;
      for (const Row& r : rows) {
        if (r.c[j] > 0) ++pos;
        else if (r.c[j] < 0) ++neg;
      }
      long cost = pos * neg - (pos + neg);
      if (best < 0 || cost < best_cost) {
        best = j;
        best_cost = cost;
      }
    }
    if (best < 0) break;
    live[best] = false;

    std::vector<Row> lower, upper, keep;
    for (Row& r : rows) {
      if (r.c[best] > 0) lower.push_back(std::move(r));
      else if (r.c[best] < 0) upper.push_back(std::move(r));
      else keep.push_back(std::move(r));
    }
    for (const Row& lo : lower)
      for (const Row& up : upper) {
        Rat a = -up.c[best];  // > 0
        Rat b = lo.c[best];   // > 0
        Row combined;
        combined.c.resize(nvars_);
        for (int j = 0; j < nvars_; ++j) combined.c[j] = a * lo.c[j] + b * up.c[j];
        combined.rhs = a * lo.rhs + b * up.rhs;
        combined.rel = (lo.rel == GT || up.rel == GT) ? GT : GE;
        keep.push_back(std::move(combined));
      }
    rows = std::move(keep);
    compact(rows);
  }

  for (const Row& r : rows) {
    // All coefficients are zero now: 0 REL rhs.
    int s = r.rhs.sign();
    if (r.rel == GE && s > 0) return false;
    if (r.rel == GT && s >= 0) return false;
  }
  return true;
}

bool angle_contains(const CharData& chars, const std::vector<int>& idx, const StabilityVector& theta) {
  assert(int(theta.size()) == chars.rank);
  if (idx.empty()) {
    for (const EpsRat& t : theta)
      if (!t.is_zero()) return false;
    return true;
  }
  const int k = int(idx.size());
  LinearSystem sys(k);
  for (int row = 0; row < chars.rank; ++row) {
    RatVec c(k);
    for (int j = 0; j < k; ++j) c[j] = Rat(chars.characters[idx[j]][row]);
    sys.add_eq(c, theta[row]);
  }
  for (int j = 0; j < k; ++j) {
    RatVec c(k, Rat(0));
    c[j] = 1;
    sys.add_gt(c, EpsRat());
  }
  return sys.feasible();
}

namespace {

// Depth-first scan of the rank-deficient subsets (pruned at full rank: any
// superset of a spanning set spans). Returns a subset whose angle contains
// theta, if one exists.
struct GenericityScan {
  const CharData& chars;
  const StabilityVector& theta;
  std::vector<int> current;
  std::vector<RatVec> echelon;  // reduced rows spanning the current characters

  std::optional<std::vector<int>> witness;

  bool reduce(RatVec v) {  // returns true if v is independent of echelon; appends
    for (const RatVec& e : echelon) {
      int lead = -1;
      for (int j = 0; j < int(e.size()); ++j)
        if (e[j] != 0) {
          lead = j;
          break;
        }
      if (lead >= 0 && v[lead] != 0) {
        Rat f = v[lead] / e[lead];
        for (int j = 0; j < int(e.size()); ++j) v[j] -= f * e[j];
      }
    }
    for (const Rat& q : v)
      if (q != 0) {
        echelon.push_back(v);
        return true;
      }
    return false;
  }

  void run(int from) {
    if (witness) return;
    if (angle_contains(chars, current, theta)) {
      witness = current;
      return;
    }
    for (int i = from; i < chars.count(); ++i) {
      std::vector<RatVec> saved = echelon;
      RatVec v(chars.rank);
      for (int k = 0; k < chars.rank; ++k) v[k] = Rat(chars.characters[i][k]);
      bool indep = reduce(std::move(v));
      if (int(echelon.size()) < chars.rank) {
        current.push_back(i);
        run(i + 1);
        current.pop_back();
      }
      echelon = std::move(saved);
      (void)indep;
      if (witness) return;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> AnticoneSet::minimal_sets() const {
  std::vector<std::vector<int>> out;
  for (uint32_t m : minimal) {
    std::vector<int> s;
    for (int i = 0; i < n_slots; ++i)
      if (m & (uint32_t(1) << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

AnticoneSet anticone_set(const CharData& chars, const StabilityVector& theta) {
  const int n = chars.count();
  const int r = chars.rank;
  if (n > 30) throw ValidationError("anticone_set: more than 30 slots is out of scope");

  GenericityScan scan{chars, theta, {}, {}, std::nullopt};
  scan.run(0);
  if (scan.witness) {
    std::string msg = "stability lies in the angle of the rank-deficient set {";
    for (size_t i = 0; i < scan.witness->size(); ++i)
      msg += (i ? "," : "") + std::to_string((*scan.witness)[i] + 1);
    msg += "}";
    throw NonGenericTheta(msg);
  }

  AnticoneSet out;
  out.n_slots = n;
  // Generic stability: minimal anticones are the independent r-subsets whose
  // unique solution is strictly positive.
  std::vector<int> stack;
  std::function<void(int)> rec = [&](int from) {
    if (int(stack.size()) == r) {
      RatMatrix a(r, RatVec(r));
      for (int row = 0; row < r; ++row)
        for (int j = 0; j < r; ++j) a[row][j] = Rat(chars.characters[stack[j]][row]);
      auto sol = solve_rational(a, theta);
      if (!sol) return;
      // solve_rational zero-fills free variables on rank-deficient systems;
      // independence requires an exact certificate.
      if (rat_rank(a) != r) return;
      for (const EpsRat& x : *sol)
        if (x.sign() <= 0) return;
      uint32_t mask = 0;
      for (int i : stack) mask |= uint32_t(1) << i;
      out.minimal.push_back(mask);
      return;
    }
    for (int i = from; i < n; ++i) {
      stack.push_back(i);
      rec(i + 1);
      stack.pop_back();
    }
  };
  rec(0);
  // Canonical order: lexicographic on the index sequences.
  std::sort(out.minimal.begin(), out.minimal.end(), [n](uint32_t a, uint32_t b) {
    for (int i = 0; i < n; ++i) {
      bool ia = a & (uint32_t(1) << i), ib = b & (uint32_t(1) << i);
      if (ia != ib) return ia;
    }
    return false;
  });
  return out;
}

std::vector<int> extended_set(const CharData& chars, const StabilityVector& theta) {
  AnticoneSet a = anticone_set(chars, theta);
  if (a.minimal.empty())
    throw ComputationError("extended_set: empty anticone family (full set is not an anticone)");
  uint32_t common = ~uint32_t(0);
  for (uint32_t m : a.minimal) common &= m;
  std::vector<int> s;
  for (int i = 0; i < chars.count(); ++i)
    if (common & (uint32_t(1) << i)) s.push_back(i);
  return s;
}

}  // namespace wallcross
