#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wallcross/anticones.hpp"
#include "wallcross/eqk.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/ifun.hpp"

using namespace wallcross;

namespace {

GitData tstar_p12() { return GitData::make(1, 2, {{1}, {2}, {-1}, {-2}}); }
GitData tstar_p13() { return GitData::make(1, 2, {{1}, {3}, {-1}, {-3}}); }
GitData atiyah() { return GitData::make(1, 2, {{1}, {1}, {-1}, {-1}}); }
GitData six_chars() {
  return GitData::make(2, 3, {{1, 0}, {1, 0}, {0, 1}, {-1, 0}, {-1, 0}, {0, -1}});
}
// The wall between these chambers is spanned by (2,1), whose box reduction
// shifts -p_r^+ by a wall vector, so the transition picks up a nonzero c_i.
GitData skew_wall() {
  return GitData::make(2, 3, {{1, 0}, {0, 1}, {2, 1}, {-1, 0}, {0, -1}, {-2, -1}});
}

RatVec rv(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

Rat half() { return Rat(1, 2); }

RationalDegree deg1(const GitData& g, const Rat& d0) { return rational_degree(g, RatVec{d0}); }

const ISeriesTerm& term_with_degree(const ISeries& s, const RatVec& d) {
  for (const ISeriesTerm& t : s.terms)
    if (t.degree.d == d) return t;
  REQUIRE(false);
  return s.terms.front();
}

int inertia_with_label(const FixedPointAtlas& a, const RatVec& label) {
  for (size_t i = 0; i < a.inertia.size(); ++i)
    if (a.inertia[i].label == label) return int(i);
  return -1;
}

Int pair_int(const IntVec& a, const IntVec& b) {
  Int s(0);
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Brute-force a-grid: values with <a> = <v> inside (min(0,v), max(0,v)].
std::vector<Rat> grid_window(const Rat& v) {
  std::vector<Rat> out;
  Rat f = rat_frac(v);
  for (long k = -8; k <= 8; ++k) {
    Rat a = f + Rat(k);
    Rat lo = v < 0 ? v : Rat(0);
    Rat hi = v < 0 ? Rat(0) : v;
    if (a > lo && a <= hi) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_chart_law(const GitData& g, const RatVec& tp, const RatVec& tm, const Rat& bound) {
  ModuliChartTransition ch = chart_transition(wall_crossing(g, tp, tm));
  const int r = g.rank;
  for (int i = 0; i < r - 1; ++i) {
    CHECK(pair_int(ch.basis_plus[size_t(i)], ch.e) == 0);
    CHECK(ch.basis_plus[size_t(i)] == ch.basis_minus[size_t(i)]);
  }
  CHECK(pair_int(ch.basis_plus.back(), ch.e) == 1);
  CHECK(pair_int(ch.basis_minus.back(), ch.e) == -1);
  CHECK(ch.c > 0);
  for (const RatVec& theta : {tp, tm}) {
    for (const RationalDegree& d : enumerate_degrees(g, theta, bound)) {
      RatVec qp = monomial_exponents(ch.basis_plus, d.d);
      RatVec qm = monomial_exponents(ch.basis_minus, d.d);
      for (int i = 0; i < r - 1; ++i) CHECK(qp[size_t(i)] == qm[size_t(i)]);
      Rat rhs = -ch.c * qm[size_t(r - 1)];
      for (int i = 0; i < r - 1; ++i) rhs += ch.c_i[size_t(i)] * qm[size_t(i)];
      CHECK(qp[size_t(r - 1)] == rhs);
    }
  }
}

}  // namespace

TEST_CASE("degree enumeration matches the hand scan on the weighted flop") {
  GitData g = tstar_p12();

  std::vector<RationalDegree> plus = enumerate_degrees(g, rv({1}), Rat(2));
  REQUIRE(plus.size() == 5);
  for (int i = 0; i < 5; ++i) {
    Rat d = Rat(i - 2) * half();
    CHECK(plus[size_t(i)].d == RatVec{d});
    CHECK(plus[size_t(i)].pairings == RatVec{d, 2 * d, -d, -2 * d});
  }

  // The pairing bound trims the half-integers' doubled slots first.
  std::vector<RationalDegree> tight = enumerate_degrees(g, rv({1}), Rat(1));
  REQUIRE(tight.size() == 3);
  CHECK(tight[0].d == RatVec{-half()});
  CHECK(tight[1].d == RatVec{Rat(0)});
  CHECK(tight[2].d == RatVec{half()});

  std::vector<RationalDegree> zero = enumerate_degrees(g, rv({1}), Rat(0));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].d == RatVec{Rat(0)});

  // Minus side: half-integer degrees have integrality set {2,4} (1-based),
  // which contains the minus anticone {4}.
  std::vector<RationalDegree> minus = enumerate_degrees(g, rv({-1}), Rat(1));
  REQUIRE(minus.size() == 3);
  CHECK(minus[0].d == RatVec{-half()});
  CHECK(minus[2].d == RatVec{half()});

  // Every accepted integrality set is an anticone of its side.
  for (const RatVec& theta : {rv({1}), rv({-1})}) {
    AnticoneSet ac = anticone_set(g.chars, stability(theta));
    for (const RationalDegree& d : enumerate_degrees(g, theta, Rat(3))) {
      std::vector<int> integral;
      for (int i = 0; i < g.count(); ++i)
        if (is_integer(d.pairings[size_t(i)])) integral.push_back(i);
      CHECK(ac.contains(integral));
    }
  }
}

TEST_CASE("degree lists are pairing-sorted and bound-complete") {
  for (const GitData& g : {six_chars(), skew_wall()}) {
    for (const RatVec& theta : {rv({3, 1}), rv({1, 1})}) {
      std::vector<RationalDegree> ds = enumerate_degrees(g, theta, Rat(2));
      CHECK(std::is_sorted(ds.begin(), ds.end(),
                           [](const RationalDegree& a, const RationalDegree& b) {
                             return a.pairings < b.pairings;
                           }));
      for (const RationalDegree& d : ds)
        for (const Rat& p : d.pairings) CHECK(rat_abs(p) <= 2);
      // 0 always qualifies; distinct degrees keep distinct pairings.
      bool has_zero = false;
      for (const RationalDegree& d : ds)
        if (d.d == RatVec(size_t(g.rank), Rat(0))) has_zero = true;
      CHECK(has_zero);
    }
  }
  // Half-integer grid on the skewed datum: the det-2 anticone {3,5} (1-based)
  // admits half-integral degrees on the plus side.
  std::vector<RationalDegree> ds = enumerate_degrees(skew_wall(), rv({3, 1}), Rat(2));
  bool has_half = false;
  for (const RationalDegree& d : ds)
    if (!is_integer(d.d[0]) || !is_integer(d.d[1])) has_half = true;
  CHECK(has_half);
}

TEST_CASE("hypergeometric blocks telescope to the documented examples") {
  GitData g = tstar_p12();

  RationalDegree dh = deg1(g, half());  // pairings (1/2, 1, -1/2, -1)
  HypFactor f0 = hyperg_factor(dh, 0);
  CHECK(f0.denominator);
  CHECK(f0.shifts == std::vector<Rat>{half()});
  HypFactor f1 = hyperg_factor(dh, 1);
  CHECK(f1.denominator);
  CHECK(f1.shifts == std::vector<Rat>{Rat(1)});
  CHECK(hyperg_factor(dh, 2).shifts.empty());  // v = -1/2: no a in (-1/2, 0]
  HypFactor f3 = hyperg_factor(dh, 3);
  CHECK_FALSE(f3.denominator);
  CHECK(f3.shifts == std::vector<Rat>{Rat(0)});  // v = -1: the a = 0 factor

  RationalDegree d32 = deg1(g, Rat(3, 2));  // slot 0 pairing 3/2
  CHECK(hyperg_factor(d32, 0).shifts == std::vector<Rat>({half(), Rat(3, 2)}));
  CHECK(hyperg_factor(d32, 3).shifts == std::vector<Rat>({Rat(-2), Rat(-1), Rat(0)}));

  CHECK(hyperg_factor(deg1(g, Rat(0)), 1).shifts.empty());
}

TEST_CASE("telescoping blocks agree with the brute-force a-grid") {
  std::vector<std::pair<GitData, RatVec>> setups = {
      {tstar_p12(), rv({1})},  {tstar_p12(), rv({-1})}, {tstar_p13(), rv({1})},
      {atiyah(), rv({1})},     {six_chars(), rv({1, 1})}, {skew_wall(), rv({3, 1})},
      {skew_wall(), rv({1, 1})}};
  for (const auto& [g, theta] : setups) {
    for (const RationalDegree& d : enumerate_degrees(g, theta, Rat(3))) {
      for (int j = 0; j < g.count(); ++j) {
        HypFactor f = hyperg_factor(d, j);
        const Rat& v = d.pairings[size_t(j)];
        CHECK(f.slot == j);
        CHECK(f.shifts == grid_window(v));
        CHECK(f.denominator == (v > 0));
        if (v > 0) CHECK(Int(f.shifts.size()) == -rat_floor(-v));  // ceil(v)
        if (v < 0) CHECK(Int(f.shifts.size()) == rat_floor(-v));
        if (v == 0) CHECK(f.shifts.empty());
      }
    }
  }
}

TEST_CASE("chart transition for the rank-one flop inverts the coordinate") {
  WallCrossingData wc = wall_crossing(tstar_p12(), rv({1}), rv({-1}));
  ModuliChartTransition ch = chart_transition(wc);
  CHECK(ch.e == IntVec{Int(1)});
  CHECK(ch.basis_plus == std::vector<IntVec>{IntVec{Int(1)}});
  CHECK(ch.basis_minus == std::vector<IntVec>{IntVec{Int(-1)}});
  CHECK(ch.c_i.empty());
  CHECK(ch.c == 1);  // ytilde = y^{-1}
}

TEST_CASE("chart law reproduces monomial exponents across crossings") {
  check_chart_law(tstar_p12(), rv({1}), rv({-1}), Rat(2));
  check_chart_law(tstar_p13(), rv({1}), rv({-1}), Rat(3));
  check_chart_law(six_chars(), rv({1, 1}), rv({-1, 1}), Rat(2));
  check_chart_law(skew_wall(), rv({3, 1}), rv({1, 1}), Rat(2));

  // The skewed wall forces a nonzero shear: p^+ = 1*(2,1) - 1*p^-.
  ModuliChartTransition ch = chart_transition(wall_crossing(skew_wall(), rv({3, 1}), rv({1, 1})));
  CHECK(ch.basis_plus.back() == IntVec({Int(1), Int(0)}));
  CHECK(ch.basis_minus.back() == IntVec({Int(1), Int(1)}));
  CHECK(ch.c_i == RatVec{Rat(1)});
  CHECK(ch.c == 1);
}

TEST_CASE("series terms carry the hand-telescoped factors") {
  GitData g = tstar_p12();
  ModuliChartTransition ch = chart_transition(wall_crossing(g, rv({1}), rv({-1})));
  ISeries s = i_series(g, rv({1}), Rat(2), ch);
  CHECK(s.side == 1);
  CHECK(s.basis == ch.basis_plus);
  CHECK(s.extended.empty());
  REQUIRE(s.terms.size() == 5);

  // y^{1/2} u_4 / ((u_1 + z/2)(u_2 + z)) in the age-1 sector.
  const ISeriesTerm& th = term_with_degree(s, RatVec{half()});
  CHECK(th.y_exps == RatVec{half()});
  CHECK(th.x_exps.empty());
  REQUIRE(th.factors.size() == 3);
  CHECK(th.factors[0] == HypFactor{0, true, {half()}});
  CHECK(th.factors[1] == HypFactor{1, true, {Rat(1)}});
  CHECK(th.factors[2] == HypFactor{3, false, {Rat(0)}});
  CHECK(th.sector.fractions == RatVec({half(), Rat(0), half(), Rat(0)}));
  CHECK(th.sector.age == 1);

  // y u_3 u_4 (u_4 - z) / ((u_1 + z)(u_2 + z)(u_2 + 2z)) in the untwisted sector.
  const ISeriesTerm& t1 = term_with_degree(s, RatVec{Rat(1)});
  CHECK(t1.y_exps == RatVec{Rat(1)});
  REQUIRE(t1.factors.size() == 4);
  CHECK(t1.factors[0] == HypFactor{0, true, {Rat(1)}});
  CHECK(t1.factors[1] == HypFactor{1, true, {Rat(1), Rat(2)}});
  CHECK(t1.factors[2] == HypFactor{2, false, {Rat(0)}});
  CHECK(t1.factors[3] == HypFactor{3, false, {Rat(-1), Rat(0)}});
  CHECK(t1.sector.fractions == RatVec(4, Rat(0)));
  CHECK(t1.sector.age == 0);
  CHECK(t1.str() == "y1^(1) (u3)(u4-1z)(u4) / (u1+1z)(u2+1z)(u2+2z)");

  // The degree-zero term is the unit of the untwisted sector.
  const ISeriesTerm& t0 = term_with_degree(s, RatVec{Rat(0)});
  CHECK(t0.y_exps == RatVec{Rat(0)});
  CHECK(t0.factors.empty());
  CHECK(t0.sector.fractions == RatVec(4, Rat(0)));
  CHECK(t0.sector.age == 0);
  CHECK(t0.str() == "1");
}

TEST_CASE("series records are side-aware and deterministic") {
  GitData g = tstar_p13();
  ModuliChartTransition ch = chart_transition(wall_crossing(g, rv({1}), rv({-1})));
  ISeries sm = i_series(g, rv({-1}), Rat(3), ch);
  CHECK(sm.side == -1);
  CHECK(sm.basis == ch.basis_minus);
  ISeries sm2 = i_series(g, rv({-1}), Rat(3), ch);
  REQUIRE(sm.terms.size() == sm2.terms.size());
  for (size_t i = 0; i < sm.terms.size(); ++i) {
    CHECK(sm.terms[i].degree.d == sm2.terms[i].degree.d);
    CHECK(sm.terms[i].y_exps == sm2.terms[i].y_exps);
    CHECK(sm.terms[i].factors == sm2.terms[i].factors);
    CHECK(sm.terms[i].sector.fractions == sm2.terms[i].sector.fractions);
  }

  // Flipping the sector convention mirrors the fractional parts.
  ISeries sp = i_series(g, rv({1}), Rat(1), ch);
  ISeries spf = i_series(g, rv({1}), Rat(1), ch, true);
  const ISeriesTerm& a = term_with_degree(sp, RatVec{Rat(1, 3)});
  const ISeriesTerm& b = term_with_degree(spf, RatVec{Rat(1, 3)});
  CHECK(a.sector.fractions == RatVec({Rat(2, 3), Rat(0), Rat(1, 3), Rat(0)}));
  CHECK(b.sector.fractions == RatVec({Rat(1, 3), Rat(0), Rat(2, 3), Rat(0)}));
  CHECK(a.sector.age == 1);
  CHECK(b.sector.age == 1);

  CHECK_THROWS_AS(i_series(g, rv({0}), Rat(1), ch), NonGenericTheta);
}

TEST_CASE("monomial exponents are additive in the degree") {
  GitData g = skew_wall();
  ModuliChartTransition ch = chart_transition(wall_crossing(g, rv({3, 1}), rv({1, 1})));
  std::vector<RationalDegree> ds = enumerate_degrees(g, rv({3, 1}), Rat(1));
  for (const RationalDegree& d1 : ds) {
    for (const RationalDegree& d2 : ds) {
      RatVec sum(d1.d);
      for (size_t k = 0; k < sum.size(); ++k) sum[k] += d2.d[k];
      RatVec lhs = monomial_exponents(ch.basis_plus, sum);
      RatVec e1 = monomial_exponents(ch.basis_plus, d1.d);
      RatVec e2 = monomial_exponents(ch.basis_plus, d2.d);
      for (size_t k = 0; k < lhs.size(); ++k) CHECK(lhs[k] == e1[k] + e2[k]);
    }
  }
}

TEST_CASE("sigma rows present the chart basis over the characters") {
  GitData g = tstar_p12();
  ModuliChartTransition ch = chart_transition(wall_crossing(g, rv({1}), rv({-1})));
  ISeries sp = i_series(g, rv({1}), Rat(1), ch);
  REQUIRE(sp.sigma.theta_rows.size() == 1);
  CHECK(sp.sigma.theta_rows[0] == RatVec({Rat(1), Rat(0), Rat(0), Rat(0)}));
  CHECK(sp.sigma.c0 == "c_0");

  // Generic reconstruction: sum_j t_j D_j = p_i for every row.
  GitData g2 = skew_wall();
  ModuliChartTransition ch2 = chart_transition(wall_crossing(g2, rv({3, 1}), rv({1, 1})));
  for (const RatVec& theta : {rv({3, 1}), rv({1, 1})}) {
    ISeries s = i_series(g2, theta, Rat(1), ch2);
    REQUIRE(s.sigma.theta_rows.size() == s.basis.size());
    for (size_t i = 0; i < s.basis.size(); ++i) {
      for (int k = 0; k < g2.rank; ++k) {
        Rat acc(0);
        for (int j = 0; j < g2.count(); ++j)
          acc += s.sigma.theta_rows[i][size_t(j)] * Rat(g2.chars.characters[size_t(j)][size_t(k)]);
        CHECK(acc == Rat(s.basis[i][size_t(k)]));
      }
    }
  }
}

TEST_CASE("restriction localizes the factors at fixed points") {
  GitData g = tstar_p12();
  ModuliChartTransition ch = chart_transition(wall_crossing(g, rv({1}), rv({-1})));
  ISeries s = i_series(g, rv({1}), Rat(2), ch);
  FixedPointAtlas atlas = fixed_points(g.chars, stability(rv({1})));
  ScalarContext cx = restriction_context(g);
  REQUIRE(cx.nvars() == 4);  // L1, L2, Lh, z

  // Degree zero restricts to 1 at every untwisted point.
  const ISeriesTerm& t0 = term_with_degree(s, RatVec{Rat(0)});
  for (const InertiaPoint& ip : atlas.inertia) {
    if (ip.label != RatVec(4, Rat(0))) continue;
    int idx = atlas.inertia_index(ip.point, ip.elem);
    CHECK(restrict_term(g, t0, s.extended, atlas, idx, cx) == Scalar::one(cx));
  }

  int twisted = inertia_with_label(atlas, RatVec({half(), Rat(0), half(), Rat(0)}));
  REQUIRE(twisted >= 0);

  // The degree -1/2 term carries the factor u_2, which dies on its only
  // matching point (delta = {2}, 1-based): effective-support vanishing.
  const ISeriesTerm& tm = term_with_degree(s, RatVec{-half()});
  CHECK(restrict_term(g, tm, s.extended, atlas, twisted, cx).is_zero());

  // The degree 1/2 term survives: Lh / ((L1 - L2/2 + z/2) * z).
  const ISeriesTerm& th = term_with_degree(s, RatVec{half()});
  Scalar val = restrict_term(g, th, s.extended, atlas, twisted, cx);
  LaurentPoly num(cx);
  num.add_term(RatVec({Rat(0), Rat(0), Rat(1), Rat(0)}), CycloNum(cx.cyclo, Rat(1)));
  LaurentPoly lin(cx);
  lin.add_term(RatVec({Rat(1), Rat(0), Rat(0), Rat(0)}), CycloNum(cx.cyclo, Rat(1)));
  lin.add_term(RatVec({Rat(0), Rat(1), Rat(0), Rat(0)}), CycloNum(cx.cyclo, -half()));
  lin.add_term(RatVec({Rat(0), Rat(0), Rat(0), Rat(1)}), CycloNum(cx.cyclo, half()));
  LaurentPoly zpoly(cx);
  zpoly.add_term(RatVec({Rat(0), Rat(0), Rat(0), Rat(1)}), CycloNum(cx.cyclo, Rat(1)));
  CHECK(val == Scalar(num, lin * zpoly));
  CHECK_FALSE(val.is_zero());

  // Sector gating.
  CHECK_THROWS_AS(restrict_term(g, th, s.extended, atlas, atlas.inertia_index(0, 0), cx),
                  SectorMismatch);

  // Extended slots force u_j = 0: killing the u_4 numerator zeroes the value,
  // while an extended denominator slot leaves a pure a*z factor.
  CHECK(restrict_factors(g, th, {3}, {1}, cx).is_zero());
  Scalar ext0 = restrict_factors(g, th, {0}, {1}, cx);
  LaurentPoly halfz(cx);
  halfz.add_term(RatVec({Rat(0), Rat(0), Rat(0), Rat(1)}), CycloNum(cx.cyclo, half()));
  CHECK(ext0 == Scalar(num, halfz * zpoly));
}

TEST_CASE("every sector matches an inertia label or the term dies everywhere") {
  std::vector<std::pair<GitData, std::pair<RatVec, RatVec>>> setups = {
      {tstar_p12(), {rv({1}), rv({-1})}},
      {tstar_p13(), {rv({1}), rv({-1})}},
      {atiyah(), {rv({1}), rv({-1})}},
      {six_chars(), {rv({1, 1}), rv({-1, 1})}},
      {skew_wall(), {rv({3, 1}), rv({1, 1})}}};
  for (const auto& [g, thetas] : setups) {
    ModuliChartTransition ch = chart_transition(wall_crossing(g, thetas.first, thetas.second));
    ScalarContext cx = restriction_context(g);
    for (const RatVec& theta : {thetas.first, thetas.second}) {
      FixedPointAtlas atlas = fixed_points(g.chars, stability(theta));
      long m0 = lcm_iso_orders(atlas);
      ISeries s = i_series(g, theta, Rat(2), ch);
      for (const ISeriesTerm& t : s.terms) {
        for (const Rat& f : t.sector.fractions) CHECK(is_integer(f * Rat(m0)));
        bool matched = false;
        for (const InertiaPoint& ip : atlas.inertia)
          if (ip.label == t.sector.fractions) matched = true;
        if (!matched) {
          for (const FixedPoint& p : atlas.points)
            CHECK(restrict_factors(g, t, s.extended, p.delta, cx).is_zero());
        }
        CHECK((matched || !t.factors.empty()));
      }
    }
  }
}
