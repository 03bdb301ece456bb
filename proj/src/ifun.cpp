#include "wallcross/ifun.hpp"

#include <algorithm>
#include <cassert>

#include "wallcross/anticones.hpp"
#include "wallcross/eqk.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/parallel.hpp"

namespace wallcross {

namespace {

Rat frac_of(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

LaurentPoly linear_form(const ScalarContext& cx, const RatVec& coef) {
  LaurentPoly p(cx);
  for (int v = 0; v < cx.nvars(); ++v) {
    if (coef[size_t(v)] == 0) continue;
    RatVec e(size_t(cx.nvars()), Rat(0));
    e[size_t(v)] = 1;
    p.add_term(e, CycloNum(cx.cyclo, coef[size_t(v)]));
  }
  return p;
}

}  // namespace

RationalDegree rational_degree(const GitData& g, const RatVec& d) {
  assert(int(d.size()) == g.rank);
  RationalDegree rd;
  rd.d = d;
  rd.pairings.reserve(size_t(g.count()));
  for (int i = 0; i < g.count(); ++i) rd.pairings.push_back(g.chars.pair(i, d));
  return rd;
}

std::vector<RationalDegree> enumerate_degrees(const GitData& g, const RatVec& theta,
                                              const Rat& bound) {
  const CharData& cd = g.chars;
  const int r = cd.rank;
  const int nn = cd.count();
  StabilityVector st = stability(theta);
  AnticoneSet ac = anticone_set(cd, st);
  if (ac.minimal.empty()) return {};
  const long m0 = lcm_iso_orders(fixed_points(cd, st));

  // The rows of any minimal anticone are independent, so |<D_j, d>| <= bound
  // over them boxes d: ||d||_inf <= ||block inverse||_inf * bound.
  std::vector<int> delta0 = ac.minimal_sets().front();
  auto block = RatMatrix(size_t(r), RatVec(size_t(r)));
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < r; ++i) block[size_t(k)][size_t(i)] = Rat(cd.characters[size_t(delta0[size_t(k)])][size_t(i)]);
  std::vector<RatVec> inv_cols;
  for (int k = 0; k < r; ++k) {
    auto unit = std::vector<Rat>(size_t(r), Rat(0));
    unit[size_t(k)] = 1;
    auto col = solve_rational(block, unit);
    assert(col);
    inv_cols.push_back(*col);
  }
  Rat dmax(0);
  for (int i = 0; i < r; ++i) {
    Rat row_sum(0);
    for (int k = 0; k < r; ++k) row_sum += rat_abs(inv_cols[size_t(k)][size_t(i)]);
    row_sum *= bound;
    if (row_sum > dmax) dmax = row_sum;
  }
  const long box = rat_floor(Rat(m0) * dmax).get_si();
  if (box < 0) return {};

  auto slices = parallel_map<std::vector<RationalDegree>>(int(2 * box + 1), [&](int s) {
    std::vector<RationalDegree> out;
    std::vector<long> k(size_t(r), -box);
    k[0] = s - box;
    while (true) {
      auto d = RatVec(size_t(r));
      for (int i = 0; i < r; ++i) d[size_t(i)] = frac_of(k[size_t(i)], m0);
      auto pairings = RatVec(size_t(nn));
      bool inside = true;
      uint32_t integral = 0;
      for (int i = 0; i < nn && inside; ++i) {
        pairings[size_t(i)] = cd.pair(i, d);
        if (rat_abs(pairings[size_t(i)]) > bound) inside = false;
        if (is_integer(pairings[size_t(i)])) integral |= uint32_t(1) << i;
      }
      if (inside && ac.contains(integral)) out.push_back({std::move(d), std::move(pairings)});
      int ax = 1;
      while (ax < r && k[size_t(ax)] == box) k[size_t(ax++)] = -box;
      if (ax >= r) break;
      ++k[size_t(ax)];
    }
    return out;
  });
  std::vector<RationalDegree> all;
  for (auto& s : slices)
    for (auto& d : s) all.push_back(std::move(d));
  std::sort(all.begin(), all.end(),
            [](const RationalDegree& a, const RationalDegree& b) { return a.pairings < b.pairings; });
  return all;
}

HypFactor hyperg_factor(const RationalDegree& d, int slot) {
  HypFactor f;
  f.slot = slot;
  const Rat v = d.pairings[size_t(slot)];
  const Rat frac = rat_frac(v);
  if (v > 0) {
    f.denominator = true;
    for (Rat a = (frac == 0 ? Rat(1) : frac); a <= v; a += 1) f.shifts.push_back(a);
  } else if (v < 0) {
    for (Rat a = (frac == 0 ? Rat(0) : Rat(frac - 1)); a > v; a -= 1) f.shifts.push_back(a);
    std::reverse(f.shifts.begin(), f.shifts.end());
  }
  return f;
}

RatVec monomial_exponents(const std::vector<IntVec>& basis, const RatVec& d) {
  RatVec exps;
  exps.reserve(basis.size());
  for (const IntVec& b : basis) {
    Rat q(0);
    for (size_t k = 0; k < b.size(); ++k) q += Rat(b[k]) * d[k];
    exps.push_back(q);
  }
  return exps;
}

std::string ISeriesTerm::str() const {
  std::string mono;
  for (size_t i = 0; i < y_exps.size(); ++i) {
    if (y_exps[i] == 0) continue;
    mono += "y" + std::to_string(i + 1) + "^(" + rat_str(y_exps[i]) + ") ";
  }
  for (size_t i = 0; i < x_exps.size(); ++i) {
    if (x_exps[i] == 0) continue;
    mono += "x" + std::to_string(i + 1) + "^(" + rat_str(x_exps[i]) + ") ";
  }
  std::string num, den;
  for (const HypFactor& f : factors) {
    for (const Rat& a : f.shifts) {
      std::string piece = "(u" + std::to_string(f.slot + 1);
      if (a != 0) piece += (a > 0 ? "+" : "") + rat_str(a) + "z";
      piece += ")";
      (f.denominator ? den : num) += piece;
    }
  }
  if (num.empty()) num = "1";
  std::string out = mono + num;
  if (!den.empty()) out += " / " + den;
  return out;
}

ModuliChartTransition chart_transition(const WallCrossingData& wc) {
  const IntMatrix& wall = wc.wall_basis;
  const int r = wall.rows();
  ModuliChartTransition t;
  t.e = wc.e;

  IntVec u = complete_to_basis(wall);
  Int pair(0);
  for (int k = 0; k < r; ++k) pair += u[size_t(k)] * wc.e[size_t(k)];
  if (pair != 1 && pair != -1)
    throw ComputationError("chart basis completion does not pair to a unit with the wall normal");
  if (pair < 0)
    for (Int& x : u) x = -x;
  IntVec p_plus = reduce_mod_lattice(u, wall);
  IntVec neg = p_plus;
  for (Int& x : neg) x = -x;
  IntVec p_minus = reduce_mod_lattice(neg, wall);

  for (int j = 0; j < r - 1; ++j) {
    t.basis_plus.push_back(wall.col(j));
    t.basis_minus.push_back(wall.col(j));
  }
  t.basis_plus.push_back(p_plus);
  t.basis_minus.push_back(p_minus);

  auto a = RatMatrix(size_t(r), RatVec(size_t(r)));
  auto rhs = RatVec(size_t(r));
  for (int k = 0; k < r; ++k) {
    for (int j = 0; j < r - 1; ++j) a[size_t(k)][size_t(j)] = Rat(wall.at(k, j));
    a[size_t(k)][size_t(r - 1)] = Rat(-p_minus[size_t(k)]);
    rhs[size_t(k)] = Rat(p_plus[size_t(k)]);
  }
  auto sol = solve_rational(a, rhs);
  if (!sol) throw ComputationError("wall-adapted bases are not related by a chart transition");
  t.c_i.assign(sol->begin(), sol->end() - 1);
  t.c = sol->back();
  if (t.c <= 0) throw ComputationError("chart transition scale is not positive");
  return t;
}

ISeries i_series(const GitData& g, const RatVec& theta, const Rat& bound,
                 const ModuliChartTransition& chart, bool flip_sector_sign) {
  const CharData& cd = g.chars;
  Rat side_pair(0);
  for (size_t k = 0; k < theta.size(); ++k) side_pair += theta[k] * Rat(chart.e[k]);
  if (side_pair == 0) throw NonGenericTheta("stability lies on the chart wall");

  ISeries s;
  s.side = side_pair > 0 ? 1 : -1;
  s.bound = bound;
  s.sector_sign_flipped = flip_sector_sign;
  s.extended = extended_set(cd, stability(theta));
  s.basis = s.side > 0 ? chart.basis_plus : chart.basis_minus;

  auto span = RatMatrix(size_t(cd.rank), RatVec(size_t(cd.count())));
  for (int k = 0; k < cd.rank; ++k)
    for (int j = 0; j < cd.count(); ++j) span[size_t(k)][size_t(j)] = Rat(cd.characters[size_t(j)][size_t(k)]);
  for (const IntVec& b : s.basis) {
    auto rhs = RatVec(size_t(cd.rank));
    for (int k = 0; k < cd.rank; ++k) rhs[size_t(k)] = Rat(b[size_t(k)]);
    auto row = solve_rational(span, rhs);
    if (!row) throw ComputationError("chart basis vector is not spanned by the characters");
    s.sigma.theta_rows.push_back(*row);
  }

  std::vector<bool> is_ext(size_t(cd.count()), false);
  for (int j : s.extended) is_ext[size_t(j)] = true;

  std::vector<RationalDegree> degrees = enumerate_degrees(g, theta, bound);
  s.terms = parallel_map<ISeriesTerm>(int(degrees.size()), [&](int idx) {
    ISeriesTerm t;
    t.degree = degrees[size_t(idx)];
    t.y_exps = monomial_exponents(s.basis, t.degree.d);
    for (int j : s.extended) t.x_exps.push_back(t.degree.pairings[size_t(j)]);
    for (int j = 0; j < cd.count(); ++j) {
      HypFactor f = hyperg_factor(t.degree, j);
      if (!f.shifts.empty()) t.factors.push_back(std::move(f));
    }
    t.sector.fractions.reserve(size_t(cd.count()));
    t.sector.age = 0;
    for (int i = 0; i < cd.count(); ++i) {
      Rat q = flip_sector_sign ? t.degree.pairings[size_t(i)] : Rat(-t.degree.pairings[size_t(i)]);
      Rat f = rat_frac(q);
      t.sector.fractions.push_back(f);
      if (!is_ext[size_t(i)]) t.sector.age += f;
    }
    return t;
  });
  return s;
}

ScalarContext restriction_context(const GitData& g) {
  std::vector<std::string> names = lambda_variable_names(g.chars);
  names.push_back("z");
  return ScalarContext(1, std::move(names));
}

Scalar restrict_factors(const GitData& g, const ISeriesTerm& term,
                        const std::vector<int>& extended, const std::vector<int>& delta,
                        const ScalarContext& cx) {
  const CharData& cd = g.chars;
  const int nv = cx.nvars();
  assert(nv == cd.lambda_count + 2);  // lambdas, lambda_h, z
  std::vector<bool> in_delta(size_t(cd.count()), false);
  for (int i : delta) in_delta[size_t(i)] = true;
  std::vector<bool> is_ext(size_t(cd.count()), false);
  for (int j : extended) is_ext[size_t(j)] = true;

  auto block = RatMatrix(size_t(cd.rank), RatVec(delta.size()));
  for (int k = 0; k < cd.rank; ++k)
    for (size_t i = 0; i < delta.size(); ++i)
      block[size_t(k)][i] = Rat(cd.characters[size_t(delta[i])][size_t(k)]);

  // Coefficients of u_j| over the weight variables; the z slot stays 0.
  auto u_form = [&](int j) -> RatVec {
    RatVec coef(size_t(nv), Rat(0));
    if (in_delta[size_t(j)] || is_ext[size_t(j)]) return coef;
    auto rhs = RatVec(size_t(cd.rank));
    for (int k = 0; k < cd.rank; ++k) rhs[size_t(k)] = Rat(cd.characters[size_t(j)][size_t(k)]);
    auto c = solve_rational(block, rhs);
    if (!c) throw ComputationError("fixed-point slots do not span the restricted character");
    for (int v = 0; v <= cd.lambda_count; ++v) {
      coef[size_t(v)] = Rat(cd.twists[size_t(j)][size_t(v)]);
      for (size_t i = 0; i < delta.size(); ++i)
        coef[size_t(v)] -= (*c)[i] * Rat(cd.twists[size_t(delta[i])][size_t(v)]);
    }
    return coef;
  };

  LaurentPoly num(cx, Rat(1));
  LaurentPoly den(cx, Rat(1));
  for (const HypFactor& f : term.factors) {
    RatVec base = u_form(f.slot);
    for (const Rat& a : f.shifts) {
      RatVec coef = base;
      coef[size_t(nv - 1)] += a;
      LaurentPoly p = linear_form(cx, coef);
      if (f.denominator)
        den = den * p;
      else
        num = num * p;
    }
  }
  return Scalar(std::move(num), std::move(den));
}

Scalar restrict_term(const GitData& g, const ISeriesTerm& term, const std::vector<int>& extended,
                     const FixedPointAtlas& atlas, int inertia, const ScalarContext& cx) {
  const InertiaPoint& ip = atlas.inertia.at(size_t(inertia));
  if (ip.label != term.sector.fractions)
    throw SectorMismatch("term sector does not match the inertia point label");
  return restrict_factors(g, term, extended, atlas.points[size_t(ip.point)].delta, cx);
}

}  // namespace wallcross
