#include "wallcross/stackgeom.hpp"

#include <algorithm>
#include <cassert>

namespace wallcross {

CokernelData reconstruct_beta(const GitData& g) {
  IntMatrix chars = g.chars.char_matrix();
  if (rat_rank(rat_matrix(chars)) != g.rank)
    throw ComputationError("reconstruct_beta: characters do not span the dual lattice");
  return cokernel(chars);
}

StackyFanData stacky_fan(const GitData& g, const RatVec& theta) {
  CokernelData ck = reconstruct_beta(g);
  AnticoneSet a = anticone_set(g.chars, stability(theta));
  if (a.minimal.empty())
    throw ComputationError("stacky_fan: empty anticone family at theta");

  StackyFanData fan;
  fan.target = ck.group;
  fan.beta = ck.projection;
  const int n_all = g.count();
  for (auto& mins : a.minimal_sets()) {
    std::vector<int> cone;
    size_t k = 0;
    for (int i = 0; i < n_all; ++i) {
      if (k < mins.size() && mins[k] == i) {
        ++k;
        continue;
      }
      cone.push_back(i);
    }
    fan.top_cones.push_back(std::move(cone));
  }
  std::sort(fan.top_cones.begin(), fan.top_cones.end());

  fan.extended = extended_set(g.chars, stability(theta));

  // Exact support test: the free part of b_i must be a nonnegative combination
  // of the generators of some top cone.
  const int f = ck.group.free_rank;
  for (int i : fan.extended) {
    bool supported = false;
    for (auto& cone : fan.top_cones) {
      LinearSystem sys(int(cone.size()));
      for (int row = 0; row < f; ++row) {
        RatVec c(cone.size());
        for (size_t j = 0; j < cone.size(); ++j) c[j] = Rat(ck.projection.at(row, cone[j]));
        sys.add_eq(c, EpsRat(Rat(ck.projection.at(row, i))));
      }
      for (size_t j = 0; j < cone.size(); ++j) {
        RatVec c(cone.size(), Rat(0));
        c[j] = 1;
        sys.add_ge(c, EpsRat());
      }
      if (sys.feasible()) {
        supported = true;
        break;
      }
    }
    fan.extended_in_support.push_back(supported);
  }
  return fan;
}

HypertoricIdealData hypertoric_ideal(const GitData& g) {
  HypertoricIdealData out;
  IntMatrix ext_rows(g.ext_count, g.rank);
  for (int j = 0; j < g.ext_count; ++j)
    for (int k = 0; k < g.rank; ++k) ext_rows.at(j, k) = g.chars.characters[2 * g.n + j][k];
  out.reduced_basis = kernel_basis(ext_rows);
  const int k = out.reduced_basis.cols();
  out.coefficients = IntMatrix(k, g.n);
  for (int b = 0; b < k; ++b)
    for (int i = 0; i < g.n; ++i) {
      Int s(0);
      for (int t = 0; t < g.rank; ++t)
        s += g.chars.characters[i][t] * out.reduced_basis.at(t, b);
      out.coefficients.at(b, i) = s;
    }
  if (rat_rank(rat_matrix(out.coefficients)) != k)
    throw ComputationError("hypertoric_ideal: reduced lattice does not embed via the pairings");
  return out;
}

FixedPointAtlas fixed_points(const CharData& chars, const StabilityVector& theta) {
  AnticoneSet a = anticone_set(chars, theta);
  const int r = chars.rank;
  FixedPointAtlas atlas;

  for (auto& delta : a.minimal_sets()) {
    FixedPoint fp;
    fp.delta = delta;

    // Character block: rows D_j for j in delta.
    IntMatrix block(r, r);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) block.at(i, k) = chars.characters[delta[i]][k];
    IntMatrix span_cols = block.transposed();  // columns D_j inside the dual lattice

    SmithDecomposition sd = smith_normal_form(span_cols);
    assert(sd.rank == r);
    fp.iso_order = 1;
    for (const Int& d : sd.invariant_factors()) fp.iso_order *= d;

    CokernelData ck = cokernel(span_cols);
    fp.iso = ck.group;
    assert(fp.iso.free_rank == 0);
    assert(fp.iso.torsion_order() == fp.iso_order);

    // Character lifts: one canonical representative per coset of the span.
    std::vector<Int> factors = sd.invariant_factors();
    std::vector<Int> counter(r, Int(0));
    for (;;) {
      IntVec raw(r, Int(0));
      for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) raw[i] += sd.u.at(i, k) * counter[k];
      fp.char_lifts.push_back(reduce_mod_lattice(raw, span_cols));
      int pos = r - 1;
      while (pos >= 0) {
        counter[pos] += 1;
        if (counter[pos] < factors[pos]) break;
        counter[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    std::sort(fp.char_lifts.begin(), fp.char_lifts.end());
    assert(Int(fp.char_lifts.size()) == fp.iso_order);

    // Group element lifts: block^{-1} Z^r / Z^r with block = U^T S V^T from the
    // span decomposition, so the generators are frac((U^{-1})^T diag(1/s_i) k).
    std::fill(counter.begin(), counter.end(), Int(0));
    for (;;) {
      RatVec ghat(r, Rat(0));
      for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
          Rat step(counter[k], factors[k]);
          step.canonicalize();
          ghat[i] += Rat(sd.u_inv.at(k, i)) * step;
        }
      for (Rat& q : ghat) q = rat_frac(q);
      for (int j = 0; j < r; ++j) {
        Rat pairing(0);
        for (int k = 0; k < r; ++k) pairing += Rat(block.at(j, k)) * ghat[k];
        assert(is_integer(pairing));
      }
      fp.elements.push_back(ghat);
      int pos = r - 1;
      while (pos >= 0) {
        counter[pos] += 1;
        if (counter[pos] < factors[pos]) break;
        counter[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    std::sort(fp.elements.begin(), fp.elements.end());
    assert(Int(fp.elements.size()) == fp.iso_order);

    atlas.points.push_back(std::move(fp));
  }

  for (int p = 0; p < int(atlas.points.size()); ++p) {
    const FixedPoint& fp = atlas.points[p];
    for (int e = 0; e < int(fp.elements.size()); ++e) {
      InertiaPoint ip;
      ip.point = p;
      ip.elem = e;
      for (int i = 0; i < chars.count(); ++i) {
        Rat pr(0);
        for (int k = 0; k < r; ++k) pr += Rat(chars.characters[i][k]) * fp.elements[e][k];
        ip.label.push_back(rat_frac(pr));
      }
      atlas.inertia.push_back(std::move(ip));
    }
  }
  return atlas;
}

int FixedPointAtlas::inertia_index(int point, int elem) const {
  int idx = 0;
  for (int p = 0; p < point; ++p) idx += int(points[p].elements.size());
  return idx + elem;
}

}  // namespace wallcross
