#include "wallcross/eqk.hpp"

#include <sstream>

#include "wallcross/anticones.hpp"
#include "wallcross/errors.hpp"

namespace wallcross {

namespace {

TwistVec zero_twist(const CharData& cd) {
  return TwistVec(size_t(cd.lambda_count) + 1, Int(0));
}

std::string set_str(const std::vector<int>& idx) {
  std::ostringstream out;
  out << "{";
  for (size_t k = 0; k < idx.size(); ++k) out << (k ? "," : "") << idx[k] + 1;
  out << "}";
  return out.str();
}

}  // namespace

LineBundleSymbol line_bundle(const CharData& cd, const IntVec& p) {
  return {p, zero_twist(cd)};
}

LineBundleSymbol r_symbol(const CharData& cd, int i) {
  return {cd.characters[size_t(i)], cd.twists[size_t(i)]};
}

LineBundleSymbol s_symbol(const CharData& cd, int i) {
  return symbol_inverse(r_symbol(cd, i));
}

LineBundleSymbol hbar_symbol(const CharData& cd) {
  LineBundleSymbol h{IntVec(size_t(cd.rank), Int(0)), zero_twist(cd)};
  h.twist.back() = 1;
  return h;
}

LineBundleSymbol symbol_product(const LineBundleSymbol& a, const LineBundleSymbol& b) {
  LineBundleSymbol r = a;
  for (size_t k = 0; k < r.p.size(); ++k) r.p[k] += b.p[k];
  for (size_t k = 0; k < r.twist.size(); ++k) r.twist[k] += b.twist[k];
  return r;
}

LineBundleSymbol symbol_inverse(const LineBundleSymbol& a) {
  LineBundleSymbol r = a;
  for (Int& x : r.p) x = -x;
  for (Int& x : r.twist) x = -x;
  return r;
}

long lcm_iso_orders(const FixedPointAtlas& atlas) {
  Int l(1);
  for (const auto& p : atlas.points) l = lcm(l, p.iso_order);
  return l.get_si();
}

long session_order(const FixedPointAtlas& atlas) { return lcm_iso_orders(atlas); }

std::vector<std::string> lambda_variable_names(const CharData& cd) {
  std::vector<std::string> names;
  for (int i = 1; i <= cd.lambda_count; ++i) names.push_back("L" + std::to_string(i));
  names.push_back("Lh");
  return names;
}

KModel make_kmodel(std::shared_ptr<const ScalarContext> scalars, const CharData& chars,
                   const StabilityVector& theta, int side) {
  KModel m{std::move(scalars), chars, fixed_points(chars, theta), side};
  if (m.scalars->nvars() != chars.lambda_count + 1)
    throw std::logic_error("scalar context variable count mismatch");
  if (m.scalars->cyclo.order % lcm_iso_orders(m.atlas) != 0)
    throw std::logic_error("scalar context order misses an isotropy order");
  return m;
}

UnitValue restrict_unit(const KModel& m, const LineBundleSymbol& sym, int inertia_idx) {
  const InertiaPoint& ip = m.atlas.inertia[size_t(inertia_idx)];
  const FixedPoint& fp = m.atlas.points[size_t(ip.point)];
  const RatVec& ghat = fp.elements[size_t(ip.elem)];
  int r = m.chars.rank;
  RatMatrix a(size_t(r), RatVec(size_t(r), Rat(0)));
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < r; ++j) a[size_t(k)][size_t(j)] = Rat(m.chars.characters[size_t(fp.delta[size_t(j)])][size_t(k)]);
  RatVec b(a.size());
  for (int k = 0; k < r; ++k) b[size_t(k)] = Rat(sym.p[size_t(k)]);
  auto c = solve_rational<Rat>(a, b);
  if (!c) throw ComputationError("anticone characters do not span");
  Rat root(0);
  for (int k = 0; k < r; ++k) root += Rat(sym.p[size_t(k)]) * ghat[size_t(k)];
  RatVec exps(sym.twist.size());
  for (size_t k = 0; k < exps.size(); ++k) exps[k] = Rat(sym.twist[k]);
  for (int j = 0; j < r; ++j) {
    const TwistVec& tw = m.chars.twists[size_t(fp.delta[size_t(j)])];
    for (size_t k = 0; k < exps.size(); ++k) exps[k] -= (*c)[size_t(j)] * Rat(tw[k]);
  }
  return UnitValue(root, std::move(exps));
}

KClass KClass::operator+(const KClass& o) const {
  if (side != o.side || values.size() != o.values.size())
    throw SideMismatch("cannot add classes from different quotients");
  KClass r = *this;
  for (size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

KClass KClass::operator-(const KClass& o) const {
  if (side != o.side || values.size() != o.values.size())
    throw SideMismatch("cannot subtract classes from different quotients");
  KClass r = *this;
  for (size_t i = 0; i < values.size(); ++i) r.values[i] -= o.values[i];
  return r;
}

KClass KClass::operator*(const KClass& o) const {
  if (side != o.side || values.size() != o.values.size())
    throw SideMismatch("cannot multiply classes from different quotients");
  KClass r = *this;
  for (size_t i = 0; i < values.size(); ++i) r.values[i] *= o.values[i];
  return r;
}

KClass KClass::operator*(const Scalar& s) const {
  KClass r = *this;
  for (auto& v : r.values) v *= s;
  return r;
}

bool KClass::operator==(const KClass& o) const {
  if (side != o.side || values.size() != o.values.size())
    throw SideMismatch("cannot compare classes from different quotients");
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i] != o.values[i]) return false;
  return true;
}

bool KClass::is_zero() const {
  for (const Scalar& v : values)
    if (!v.is_zero()) return false;
  return true;
}

KClass kclass(const KModel& m, const LineBundleSymbol& sym) {
  std::vector<Scalar> vals;
  vals.reserve(size_t(m.points()));
  for (int q = 0; q < m.points(); ++q)
    vals.push_back(restrict_unit(m, sym, q).to_scalar(*m.scalars));
  return KClass(m.side, std::move(vals));
}

KClass kclass_one(const KModel& m) {
  return KClass(m.side, std::vector<Scalar>(size_t(m.points()), Scalar::one(*m.scalars)));
}

KClass kclass_zero(const KModel& m) {
  return KClass(m.side, std::vector<Scalar>(size_t(m.points()), Scalar::zero(*m.scalars)));
}

KClass structure_class_with_lift(const KModel& m, int point, const IntVec& rho_hat) {
  const FixedPoint& fp = m.atlas.points[size_t(point)];
  std::vector<bool> in_delta(size_t(m.chars.count()), false);
  for (int i : fp.delta) in_delta[size_t(i)] = true;
  LineBundleSymbol lift = line_bundle(m.chars, rho_hat);
  std::vector<Scalar> vals;
  vals.reserve(size_t(m.points()));
  for (int q = 0; q < m.points(); ++q) {
    Scalar v = restrict_unit(m, lift, q).to_scalar(*m.scalars);
    for (int i = 0; i < m.chars.count(); ++i) {
      if (in_delta[size_t(i)]) continue;
      v *= Scalar::one(*m.scalars) - restrict_unit(m, s_symbol(m.chars, i), q).to_scalar(*m.scalars);
    }
    vals.push_back(std::move(v));
  }
  return KClass(m.side, std::move(vals));
}

std::vector<StructureBasisClass> structure_basis(const KModel& m) {
  std::vector<StructureBasisClass> basis;
  for (int p = 0; p < int(m.atlas.points.size()); ++p) {
    const FixedPoint& fp = m.atlas.points[size_t(p)];
    for (int rho = 0; rho < int(fp.char_lifts.size()); ++rho) {
      const IntVec& rho_hat = fp.char_lifts[size_t(rho)];
      basis.push_back({p, rho, rho_hat, structure_class_with_lift(m, p, rho_hat)});
    }
  }
  return basis;
}

std::vector<ValidationCheck> verify_relations(const GitData& g, const RatVec& theta) {
  std::vector<ValidationCheck> checks;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
  };

  StabilityVector th = stability(theta);
  FixedPointAtlas atlas = fixed_points(g.chars, th);
  auto scalars = std::make_shared<ScalarContext>(session_order(atlas),
                                                 lambda_variable_names(g.chars));
  KModel m{scalars, g.chars, atlas, kSidePlus};
  int npts = m.points();
  int nchars = g.count();

  // Coordinate pairs multiply to hbar.
  {
    bool ok = true;
    KClass h = kclass(m, hbar_symbol(g.chars));
    for (int i = 0; i < g.n && ok; ++i)
      ok = kclass(m, r_symbol(g.chars, i)) * kclass(m, r_symbol(g.chars, g.n + i)) == h;
    add("pair_product_is_hbar", ok, "R_i * R_{n+i} = hbar pointwise");
  }

  // Restriction of R_i is 1 on its own anticone.
  {
    bool ok = true;
    for (int q = 0; q < npts && ok; ++q) {
      const FixedPoint& fp = m.atlas.points[size_t(m.atlas.inertia[size_t(q)].point)];
      for (int i : fp.delta) {
        UnitValue u = restrict_unit(m, r_symbol(g.chars, i), q);
        if (u != UnitValue::one(int(u.exps.size()))) ok = false;
      }
    }
    add("own_anticone_restriction_trivial", ok, "restrict(R_i) = 1 for i in delta");
  }

  // Inverses and additivity of the defining formula.
  {
    bool ok = true;
    KClass one = kclass_one(m);
    for (int i = 0; i < nchars && ok; ++i)
      ok = kclass(m, r_symbol(g.chars, i)) * kclass(m, s_symbol(g.chars, i)) == one;
    add("coordinate_inverses", ok, "R_i * S_i = 1");
  }
  {
    bool ok = true;
    IntVec p(size_t(g.rank), Int(1));
    IntVec q(size_t(g.rank), Int(0));
    if (!q.empty()) q[0] = 2;
    IntVec pq(size_t(g.rank));
    for (size_t k = 0; k < pq.size(); ++k) pq[k] = p[k] + q[k];
    ok = kclass(m, line_bundle(g.chars, p)) * kclass(m, line_bundle(g.chars, q)) ==
         kclass(m, line_bundle(g.chars, pq));
    add("line_bundle_additivity", ok, "L(p) * L(q) = L(p+q)");
  }

  // Structure basis: off-block vanishing and invertible blocks.
  {
    auto basis = structure_basis(m);
    bool off_ok = true, det_ok = true;
    for (const auto& bc : basis)
      for (int q = 0; q < npts; ++q)
        if (m.atlas.inertia[size_t(q)].point != bc.point && !bc.cls.values[size_t(q)].is_zero())
          off_ok = false;
    for (int p = 0; p < int(m.atlas.points.size()); ++p) {
      const FixedPoint& fp = m.atlas.points[size_t(p)];
      int order = int(fp.elements.size());
      ScalarMatrix block;
      block.assign(size_t(order), {});
      int row = 0;
      for (const auto& bc : basis) {
        if (bc.point != p) continue;
        for (int el = 0; el < order; ++el)
          block[size_t(row)].push_back(bc.cls.values[size_t(m.atlas.inertia_index(p, el))]);
        ++row;
      }
      if (row != order || scalar_det(block).is_zero()) det_ok = false;
    }
    add("basis_block_diagonal", off_ok, "e_{delta,rho} vanishes off its block");
    add("basis_blocks_invertible", det_ok, "per-block restriction determinants nonzero");
  }

  // Products over sets whose complement is not an anticone vanish everywhere.
  if (nchars <= 12) {
    AnticoneSet anti = anticone_set(g.chars, th);
    std::vector<std::vector<Scalar>> one_minus_s;
    one_minus_s.assign(size_t(nchars), {});
    for (int i = 0; i < nchars; ++i)
      for (int q = 0; q < npts; ++q)
        one_minus_s[size_t(i)].push_back(
            Scalar::one(*scalars) - restrict_unit(m, s_symbol(g.chars, i), q).to_scalar(*scalars));
    bool ok = true;
    std::string witness;
    uint32_t full = (uint32_t(1) << nchars) - 1;
    for (uint32_t set = 0; set <= full && ok; ++set) {
      if (anti.contains(full & ~set)) continue;
      for (int q = 0; q < npts && ok; ++q) {
        Scalar prod = Scalar::one(*scalars);
        for (int i = 0; i < nchars; ++i)
          if (set & (uint32_t(1) << i)) prod *= one_minus_s[size_t(i)][size_t(q)];
        if (!prod.is_zero()) {
          ok = false;
          std::vector<int> idx;
          for (int i = 0; i < nchars; ++i)
            if (set & (uint32_t(1) << i)) idx.push_back(i);
          witness = set_str(idx);
        }
      }
    }
    add("non_anticone_products_vanish", ok,
        ok ? "all products with non-anticone complement vanish" : "failing set " + witness);
  }

  return checks;
}

}  // namespace wallcross
