#include "wallcross/fmk.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wallcross/errors.hpp"
#include "wallcross/parallel.hpp"

namespace wallcross {

namespace {

Int pair_int(const CharData& cd, int slot, const IntVec& e) {
  Int s(0);
  for (size_t k = 0; k < e.size(); ++k) s += cd.characters[size_t(slot)][k] * e[k];
  return s;
}

std::string set_str(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

int find_point(const FixedPointAtlas& atlas, const std::vector<int>& delta) {
  for (size_t i = 0; i < atlas.points.size(); ++i)
    if (atlas.points[i].delta == delta) return int(i);
  return -1;
}

Rat frac_of(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return rat_frac(q);
}

// Flopped-slot inventory for one direction; also feeds the session order of
// the reversed direction so a context and its reversal share a field.
Int direction_l_lcm(const GitData& g, const FixedPointAtlas& from, const FixedPointAtlas& to,
                    const IntVec& e, int sign) {
  Int acc(1);
  for (const auto& pt : from.points) {
    if (find_point(to, pt.delta) >= 0) continue;
    std::vector<int> crossing;
    for (int j : pt.delta)
      if (sign * pair_int(g.chars, j, e) < 0) crossing.push_back(j);
    if (crossing.size() != 1)
      throw DegenerateCrossing("anticone " + set_str(pt.delta) + " has " +
                               std::to_string(crossing.size()) + " slots crossing the wall");
    acc = lcm(acc, abs(pair_int(g.chars, crossing[0], e)));
  }
  return acc;
}

void check_scalars(const CrossingContext& ctx, const std::shared_ptr<const ScalarContext>& sc) {
  if (sc->cyclo.order % ctx.session != 0)
    throw ComputationError("scalar field order " + std::to_string(sc->cyclo.order) +
                           " does not cover session order " + std::to_string(ctx.session));
  if (sc->nvars() != ctx.g.chars.lambda_count + 1)
    throw ComputationError("scalar field has the wrong variable count");
}

}  // namespace

CrossingContext make_crossing(const GitData& g, const RatVec& theta_plus, const RatVec& theta_minus,
                              std::shared_ptr<const ScalarContext> scalars) {
  CrossingContext ctx;
  ctx.g = g;
  ctx.theta_plus = theta_plus;
  ctx.theta_minus = theta_minus;
  ctx.wc = wall_crossing(g, theta_plus, theta_minus);
  ctx.tilde = tilde_data(g, *ctx.wc, theta_plus, theta_minus);

  FixedPointAtlas ap = fixed_points(g.chars, stability(theta_plus));
  FixedPointAtlas am = fixed_points(g.chars, stability(theta_minus));
  ctx.tilde_atlas = fixed_points(ctx.tilde->chars, ctx.tilde->theta_tilde);
  WallCrossingData wc_rev = wall_crossing(g, theta_minus, theta_plus);
  TildeGitData tilde_rev = tilde_data(g, wc_rev, theta_minus, theta_plus);
  FixedPointAtlas at_rev = fixed_points(tilde_rev.chars, tilde_rev.theta_tilde);

  Int l_all = lcm(direction_l_lcm(g, am, ap, ctx.wc->e, +1),
                  direction_l_lcm(g, ap, am, ctx.wc->e, -1));
  Int m0 = lcm(lcm(Int(lcm_iso_orders(ap)), Int(lcm_iso_orders(am))),
               lcm(Int(lcm_iso_orders(ctx.tilde_atlas)), Int(lcm_iso_orders(at_rev))));
  ctx.session = Int(m0 * l_all).get_si();

  ctx.cases.resize(am.points.size());
  for (size_t mp = 0; mp < am.points.size(); ++mp) {
    CrossingCase cs;
    int pp = find_point(ap, am.points[mp].delta);
    if (pp >= 0) {
      cs.shared = true;
      cs.plus_point = pp;
      if (am.points[mp].char_lifts != ap.points[size_t(pp)].char_lifts ||
          am.points[mp].elements != ap.points[size_t(pp)].elements)
        throw std::logic_error("shared anticone produced different local data on the two sides");
    } else {
      for (int j : am.points[mp].delta)
        if (pair_int(g.chars, j, ctx.wc->e) < 0) cs.j_minus = j;
      cs.l = Int(-pair_int(g.chars, cs.j_minus, ctx.wc->e)).get_si();
    }
    ctx.cases[mp] = cs;
  }

  if (scalars) {
    ctx.scalars = scalars;
  } else {
    ctx.scalars = std::make_shared<ScalarContext>(ctx.session, lambda_variable_names(g.chars));
  }
  check_scalars(ctx, ctx.scalars);
  ctx.plus = KModel{ctx.scalars, g.chars, std::move(ap), kSidePlus};
  ctx.minus = KModel{ctx.scalars, g.chars, std::move(am), kSideMinus};
  ctx.basis_plus = structure_basis(ctx.plus);
  ctx.basis_minus = structure_basis(ctx.minus);
  return ctx;
}

CrossingContext make_trivial_loop(const GitData& g, const RatVec& theta) {
  CrossingContext ctx;
  ctx.g = g;
  ctx.theta_plus = theta;
  ctx.theta_minus = theta;
  FixedPointAtlas ap = fixed_points(g.chars, stability(theta));
  FixedPointAtlas am = ap;
  ctx.session = lcm_iso_orders(ap);
  ctx.scalars = std::make_shared<ScalarContext>(ctx.session, lambda_variable_names(g.chars));
  ctx.cases.resize(ap.points.size());
  for (size_t i = 0; i < ap.points.size(); ++i) {
    ctx.cases[i].shared = true;
    ctx.cases[i].plus_point = int(i);
  }
  ctx.plus = KModel{ctx.scalars, g.chars, std::move(ap), kSidePlus};
  ctx.minus = KModel{ctx.scalars, g.chars, std::move(am), kSideMinus};
  ctx.basis_plus = structure_basis(ctx.plus);
  ctx.basis_minus = structure_basis(ctx.minus);
  return ctx;
}

KClass fm_transform_with_lift(const CrossingContext& ctx, int minus_point, const IntVec& rho_hat,
                              long branch) {
  const CrossingCase& cs = ctx.cases.at(size_t(minus_point));
  const ScalarContext& cx = *ctx.scalars;
  if (int(rho_hat.size()) != ctx.g.rank) throw std::logic_error("character lift has wrong length");
  if (cs.shared) return structure_class_with_lift(ctx.plus, cs.plus_point, rho_hat);

  const CharData& cd = ctx.g.chars;
  const IntVec& e = ctx.wc->e;
  const long l = cs.l;
  const std::vector<int>& delta = ctx.minus.atlas.points[size_t(minus_point)].delta;
  std::set<int> in_delta(delta.begin(), delta.end());
  std::vector<Int> pair(size_t(cd.count()));
  for (int i = 0; i < cd.count(); ++i) pair[size_t(i)] = pair_int(cd, i, e);
  Int rho_e(0);
  for (size_t k = 0; k < e.size(); ++k) rho_e += rho_hat[k] * e[k];
  const RatVec no_exps(size_t(cx.nvars()), Rat(0));

  int np = ctx.plus.points();
  std::vector<Scalar> vals;
  vals.reserve(size_t(np));
  for (int q = 0; q < np; ++q) {
    UnitValue rj = restrict_unit(ctx.plus, r_symbol(cd, cs.j_minus), q);
    UnitValue base = rj.principal_root(l) * UnitValue(frac_of(branch, l), no_exps);
    UnitValue lrho = restrict_unit(ctx.plus, line_bundle(cd, rho_hat), q);
    Scalar sum = Scalar::zero(cx);
    for (long k = 0; k < l; ++k) {
      UnitValue t = base * UnitValue(frac_of(k, l), no_exps);
      UnitValue tinv = t.inverse();
      // (1 - S_{j_minus}) / (1 - t^{-1}) expanded exactly: S_{j_minus}| = t^{-l}.
      Scalar geom = Scalar::zero(cx);
      UnitValue step = UnitValue::one(cx.nvars());
      for (long a = 0; a < l; ++a) {
        geom += step.to_scalar(cx);
        step = step * tinv;
      }
      Scalar term = geom * (lrho * t.pow(rho_e)).to_scalar(cx);
      for (int i = 0; i < cd.count(); ++i) {
        if (in_delta.count(i)) continue;
        UnitValue si = restrict_unit(ctx.plus, s_symbol(cd, i), q);
        if (pair[size_t(i)] < 0)
          term *= Scalar::one(cx) - si.to_scalar(cx);
        else
          term *= Scalar::one(cx) - (tinv.pow(pair[size_t(i)]) * si).to_scalar(cx);
      }
      sum += term;
    }
    vals.push_back(sum * Scalar(cx, Rat(1, l)));
  }
  return KClass(kSidePlus, std::move(vals));
}

KClass fm_transform(const CrossingContext& ctx, int minus_point, int rho) {
  const IntVec& rho_hat = ctx.minus.atlas.points.at(size_t(minus_point)).char_lifts.at(size_t(rho));
  return fm_transform_with_lift(ctx, minus_point, rho_hat, 0);
}

bool FMMatrix::is_identity() const {
  if (rows.size() != cols.size()) return false;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i] == cols[i])) return false;
    for (size_t j = 0; j < cols.size(); ++j) {
      const Scalar& v = entries[i][j];
      if (i == j ? !(v == Scalar::one(*v.ctx)) : !v.is_zero()) return false;
    }
  }
  return true;
}

FMMatrix fm_compose(const FMMatrix& outer, const FMMatrix& inner) {
  if (outer.cols.size() != inner.rows.size())
    throw std::logic_error("composition shape mismatch");
  for (size_t k = 0; k < outer.cols.size(); ++k)
    if (!(outer.cols[k] == inner.rows[k])) throw std::logic_error("composition label mismatch");
  FMMatrix out;
  out.rows = outer.rows;
  out.cols = inner.cols;
  const ScalarContext& cx = *outer.entries.at(0).at(0).ctx;
  out.entries.assign(out.rows.size(), std::vector<Scalar>(out.cols.size(), Scalar::zero(cx)));
  for (size_t i = 0; i < out.rows.size(); ++i)
    for (size_t j = 0; j < out.cols.size(); ++j) {
      Scalar s = Scalar::zero(cx);
      for (size_t k = 0; k < outer.cols.size(); ++k)
        s += outer.entries[i][k] * inner.entries[k][j];
      out.entries[i][j] = s;
    }
  return out;
}

Scalar fm_det(const FMMatrix& m) {
  if (m.rows.size() != m.cols.size()) throw std::logic_error("determinant of non-square matrix");
  return scalar_det(m.entries);
}

FMMatrix fm_matrix(const CrossingContext& ctx) {
  const ScalarContext& cx = *ctx.scalars;
  FMMatrix m;
  for (const auto& b : ctx.basis_plus) m.rows.push_back({b.point, b.rho});
  for (const auto& b : ctx.basis_minus) m.cols.push_back({b.point, b.rho});
  const int nrows = int(m.rows.size());
  const int ncols = int(m.cols.size());

  std::vector<KClass> images = parallel_map<KClass>(ncols, [&](int c) {
    return fm_transform(ctx, ctx.basis_minus[size_t(c)].point, ctx.basis_minus[size_t(c)].rho);
  });

  m.entries.assign(size_t(nrows), std::vector<Scalar>(size_t(ncols), Scalar::zero(cx)));
  const FixedPointAtlas& ap = ctx.plus.atlas;
  for (int p = 0; p < int(ap.points.size()); ++p) {
    std::vector<int> block_rows;
    for (int rb = 0; rb < nrows; ++rb)
      if (ctx.basis_plus[size_t(rb)].point == p) block_rows.push_back(rb);
    std::vector<int> block_pts;
    for (int el = 0; el < int(ap.points[size_t(p)].elements.size()); ++el)
      block_pts.push_back(ap.inertia_index(p, el));
    ScalarMatrix a;
    a.assign(block_pts.size(), std::vector<Scalar>(block_rows.size(), Scalar::zero(cx)));
    for (size_t i = 0; i < block_pts.size(); ++i)
      for (size_t j = 0; j < block_rows.size(); ++j)
        a[i][j] = ctx.basis_plus[size_t(block_rows[j])].cls.values[size_t(block_pts[i])];
    for (int c = 0; c < ncols; ++c) {
      std::vector<Scalar> rhs;
      for (int q : block_pts) rhs.push_back(images[size_t(c)].values[size_t(q)]);
      std::vector<Scalar> x = scalar_solve(a, std::move(rhs));
      for (size_t j = 0; j < block_rows.size(); ++j)
        m.entries[size_t(block_rows[j])][size_t(c)] = x[j];
    }
  }

  // Every image must be reproduced on the whole atlas, not just block by block.
  for (int c = 0; c < ncols; ++c) {
    KClass rec(kSidePlus, std::vector<Scalar>(size_t(ctx.plus.points()), Scalar::zero(cx)));
    for (int rb = 0; rb < nrows; ++rb)
      rec = rec + ctx.basis_plus[size_t(rb)].cls * m.entries[size_t(rb)][size_t(c)];
    if (!(rec == images[size_t(c)]))
      throw std::logic_error("transform image escapes the plus-side basis span");
  }
  return m;
}

MonodromyData monodromy_data(const CrossingContext& ctx) {
  MonodromyData md;
  md.forward = fm_matrix(ctx);
  if (ctx.wc) {
    CrossingContext rev = make_crossing(ctx.g, ctx.theta_minus, ctx.theta_plus, ctx.scalars);
    md.reverse = fm_matrix(rev);
  } else {
    md.reverse = md.forward;
  }
  md.loop = fm_compose(md.reverse, md.forward);
  return md;
}

FMMatrix monodromy(const CrossingContext& ctx) { return monodromy_data(ctx).loop; }

KClass localization_oracle(const CrossingContext& ctx, const KClass& e_minus) {
  if (e_minus.side != kSideMinus) throw SideMismatch("oracle input must be a minus-side class");
  if (!ctx.wc) throw ComputationError("oracle needs a genuine wall crossing");
  if (int(e_minus.values.size()) != ctx.minus.points())
    throw SideMismatch("oracle input has the wrong number of components");
  const ScalarContext& cx = *ctx.scalars;

  auto all_free = [](const FixedPointAtlas& a) {
    for (const auto& p : a.points)
      if (p.iso_order != 1) return false;
    return true;
  };
  if (!all_free(ctx.plus.atlas) || !all_free(ctx.minus.atlas) || !all_free(ctx.tilde_atlas))
    throw OrbifoldUnsupported("oracle requires trivial isotropy on both sides and on the blowup");
  for (const auto& cs : ctx.cases)
    if (!cs.shared && cs.l != 1)
      throw OrbifoldUnsupported("oracle requires every crossing slot to pair to -1");

  KModel blowup{ctx.scalars, ctx.tilde->chars, ctx.tilde_atlas, kSideBlowup};
  const int r = ctx.g.rank;
  const IntVec& e = ctx.wc->e;

  // Pullback of the character p along either side of the blowup roof. The
  // extra coordinate is -<p, e> toward the plus side and 0 toward the minus
  // side, matching how the blowup characters lift the originals.
  auto match = [&](const KModel& side, int side_point, int tilde_point, bool plus_side) {
    for (int k = 0; k < r; ++k) {
      IntVec ek(size_t(r), Int(0));
      ek[size_t(k)] = 1;
      IntVec lift = ek;
      Int extra(0);
      if (plus_side) extra = -e[size_t(k)];
      lift.push_back(extra);
      UnitValue up = restrict_unit(blowup, line_bundle(blowup.chars, lift),
                                   ctx.tilde_atlas.inertia_index(tilde_point, 0));
      UnitValue dn = restrict_unit(side, line_bundle(ctx.g.chars, ek),
                                   side.atlas.inertia_index(side_point, 0));
      if (!(up == dn)) return false;
    }
    return true;
  };
  auto correspondent = [&](const KModel& side, int tilde_point, bool plus_side) {
    int found = -1;
    for (int p = 0; p < int(side.atlas.points.size()); ++p) {
      if (!match(side, p, tilde_point, plus_side)) continue;
      if (found >= 0) throw ComputationError("blowup point restricts like two distinct points");
      found = p;
    }
    if (found < 0) throw ComputationError("blowup point restricts like no point downstairs");
    return found;
  };

  auto euler = [&](const KModel& mdl, int point) {
    const auto& delta = mdl.atlas.points[size_t(point)].delta;
    std::set<int> in_delta(delta.begin(), delta.end());
    Scalar v = Scalar::one(cx);
    int idx = mdl.atlas.inertia_index(point, 0);
    for (int i = 0; i < mdl.chars.count(); ++i) {
      if (in_delta.count(i)) continue;
      v *= Scalar::one(cx) - restrict_unit(mdl, s_symbol(mdl.chars, i), idx).to_scalar(cx);
    }
    return v;
  };

  std::vector<Scalar> out(size_t(ctx.plus.points()), Scalar::zero(cx));
  std::vector<bool> touched(size_t(ctx.plus.atlas.points.size()), false);
  for (int q = 0; q < int(ctx.tilde_atlas.points.size()); ++q) {
    int pp = correspondent(ctx.plus, q, true);
    int mp = correspondent(ctx.minus, q, false);
    touched[size_t(pp)] = true;
    const Scalar& input = e_minus.values[size_t(ctx.minus.atlas.inertia_index(mp, 0))];
    size_t slot = size_t(ctx.plus.atlas.inertia_index(pp, 0));
    out[slot] += input * euler(ctx.plus, pp) / euler(blowup, q);
  }
  for (bool t : touched)
    if (!t) throw ComputationError("some plus-side point receives no blowup contribution");
  return KClass(kSidePlus, std::move(out));
}

bool in_base_field(const Scalar& v, long base_order) {
  const ScalarContext& cx = *v.ctx;
  const long m = cx.cyclo.order;
  if (m % base_order != 0) throw std::logic_error("base order must divide the field order");
  // Coefficient layer: conjugations zeta -> zeta^a fixing the base roots.
  for (long a = 1; a < m; ++a) {
    if (a % base_order != 1 % base_order) continue;
    if (gcd(Int(a), Int(m)) != 1) continue;
    if (!(v.galois_conjugate(a) == v)) return false;
  }
  // Monomial layer: each variable's fractional exponents beyond 1/base_order.
  Rat b(base_order);
  for (int i = 0; i < cx.nvars(); ++i) {
    auto twist = [&](const LaurentPoly& p) {
      LaurentPoly out(cx);
      for (const auto& [exps, coef] : p.terms)
        out.add_term(exps, coef * root_of_unity(cx.cyclo, rat_frac(b * exps[size_t(i)])));
      return out;
    };
    if (!(Scalar(twist(v.num), twist(v.den)) == v)) return false;
  }
  return true;
}

}  // namespace wallcross
