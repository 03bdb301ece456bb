#include "wallcross/wallcrossing.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace wallcross {

namespace {

// Smallest integer vector on the ray of a nonzero rational vector, keeping
// orientation.
IntVec primitive_vector(const RatVec& v) {
  Int den(1);
  for (const Rat& q : v) den = lcm(den, q.get_den());
  IntVec w(v.size());
  Int g(0);
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(den);
    w[i] = scaled.get_num();
    g = gcd(g, w[i]);
  }
  if (g == 0) throw ComputationError("primitive_vector: zero vector");
  for (Int& x : w) x /= g;
  return w;
}

std::optional<RatMatrix> rat_inverse(RatMatrix a) {
  const int n = int(a.size());
  RatMatrix inv(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rat d = a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

WallCrossingData wall_crossing(const GitData& g, const RatVec& theta_plus, const RatVec& theta_minus) {
  const int r = g.rank;
  WallCrossingData wc;
  wc.aplus = anticone_set(g.chars, stability(theta_plus));
  wc.aminus = anticone_set(g.chars, stability(theta_minus));
  if (wc.aplus == wc.aminus)
    throw SameChamber("the two stabilities lie in the same chamber");

  // H-representation of the intersection of the chamber closures: for each
  // minimal anticone delta the closed simplicial cone over its characters is
  // cut out by the rows of the inverse transposed character block.
  std::vector<IntVec> normals;
  auto add_cone_rows = [&](const std::vector<int>& delta) {
    RatMatrix mt(r, RatVec(r));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) mt[k][i] = Rat(g.chars.characters[delta[i]][k]);
    auto inv = rat_inverse(mt);
    assert(inv.has_value());
    for (int i = 0; i < r; ++i) normals.push_back(primitive_vector((*inv)[i]));
  };
  for (auto& d : wc.aplus.minimal_sets()) add_cone_rows(d);
  for (auto& d : wc.aminus.minimal_sets()) add_cone_rows(d);
  std::sort(normals.begin(), normals.end());
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

  auto feasible_with = [&](const IntVec& strict_row) {
    LinearSystem sys(r);
    for (const IntVec& w : normals)
      sys.add_ge(RatVec(w.begin(), w.end()), EpsRat());
    sys.add_gt(RatVec(strict_row.begin(), strict_row.end()), EpsRat());
    return sys.feasible();
  };

  std::vector<IntVec> implicit;
  for (const IntVec& w : normals)
    if (!feasible_with(w)) implicit.push_back(w);
  IntMatrix imp = IntMatrix::from_rows(implicit);
  int imp_rank = implicit.empty() ? 0 : rat_rank(rat_matrix(imp));
  if (imp_rank != 1)
    throw NotAdjacent("chamber closures meet in codimension " + std::to_string(imp_rank) +
                      ", not in a facet");

  wc.e = primitive_vector(RatVec(implicit[0].begin(), implicit[0].end()));
  Rat ep(0), em(0);
  for (int k = 0; k < r; ++k) {
    ep += Rat(wc.e[k]) * theta_plus[k];
    em += Rat(wc.e[k]) * theta_minus[k];
  }
  if (ep == 0 || em == 0) throw NotAdjacent("a stability lies on the separating wall");
  if (ep < 0) {
    for (Int& x : wc.e) x = -x;
    ep = -ep;
    em = -em;
  }
  if (!(ep > 0 && em < 0))
    throw NotAdjacent("stabilities lie on the same side of the separating wall");

  // Extremal rays of the shared facet; their sum is a relative-interior point.
  std::set<IntVec> rays;
  if (r >= 2) {
    std::vector<int> pick;
    std::function<void(size_t)> rec = [&](size_t from) {
      if (int(pick.size()) == r - 1) {
        std::vector<IntVec> rows;
        for (int i : pick) rows.push_back(normals[i]);
        IntMatrix a = IntMatrix::from_rows(rows);
        if (rat_rank(rat_matrix(a)) != r - 1) return;
        IntMatrix k = kernel_basis(a);
        if (k.cols() != 1) return;
        for (int sign = 0; sign < 2; ++sign) {
          IntVec z = k.col(0);
          if (sign) for (Int& x : z) x = -x;
          bool inside = true;
          for (const IntVec& w : normals) {
            Int s(0);
            for (int t = 0; t < r; ++t) s += w[t] * z[t];
            if (s < 0) {
              inside = false;
              break;
            }
          }
          if (inside) rays.insert(z);
        }
        return;
      }
      for (size_t i = from; i < normals.size(); ++i) {
        pick.push_back(int(i));
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }
  wc.theta_zero.assign(r, Rat(0));
  for (const IntVec& z : rays)
    for (int k = 0; k < r; ++k) wc.theta_zero[k] += Rat(z[k]);
  if (r >= 2 && rays.empty())
    throw NotAdjacent("shared facet has no extremal rays");
  Rat e_dot_t0(0);
  for (int k = 0; k < r; ++k) e_dot_t0 += Rat(wc.e[k]) * wc.theta_zero[k];
  if (e_dot_t0 != 0) throw ComputationError("facet barycenter is off the wall");

  for (int i = 0; i < g.count(); ++i) {
    Int s(0);
    for (int k = 0; k < r; ++k) s += g.chars.characters[i][k] * wc.e[k];
    if (s > 0) wc.m_plus.push_back(i);
    else if (s < 0) wc.m_minus.push_back(i);
    else wc.m_zero.push_back(i);
  }
  if (wc.m_plus.size() != wc.m_minus.size())
    throw ComputationError("crossing is not balanced: |M+| != |M-| (datum is not Lawrence-valid)");

  IntMatrix erow(1, r);
  for (int k = 0; k < r; ++k) erow.at(0, k) = wc.e[k];
  wc.wall_basis = kernel_basis(erow);
  return wc;
}

TildeGitData tilde_data(const GitData& g, const WallCrossingData& wc, const RatVec& theta_plus,
                        const RatVec& theta_minus) {
  const int r = g.rank;
  TildeGitData t;
  t.chars.rank = r + 1;
  t.chars.lambda_count = g.chars.lambda_count;
  for (int i = 0; i < g.count(); ++i) {
    Int pairing(0);
    for (int k = 0; k < r; ++k) pairing += g.chars.characters[i][k] * wc.e[k];
    IntVec d = g.chars.characters[i];
    d.push_back(pairing > 0 ? Int(-pairing) : Int(0));
    t.chars.characters.push_back(std::move(d));
    t.chars.twists.push_back(g.chars.twists[i]);
  }
  IntVec last(r + 1, Int(0));
  last[r] = 1;
  t.chars.characters.push_back(std::move(last));
  t.chars.twists.push_back(TwistVec(g.chars.lambda_count + 1, Int(0)));

  t.theta_tilde = stability(wc.theta_zero);
  t.theta_tilde.push_back(EpsRat(Rat(0), Rat(-1)));
  t.theta_tilde_plus = theta_plus;
  t.theta_tilde_plus.push_back(Rat(1));
  t.theta_tilde_minus = theta_minus;
  t.theta_tilde_minus.push_back(Rat(1));
  return t;
}

}  // namespace wallcross
