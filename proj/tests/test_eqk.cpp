#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wallcross/anticones.hpp"
#include "wallcross/eqk.hpp"
#include "wallcross/errors.hpp"

using namespace wallcross;

namespace {

GitData tstar_p12() { return GitData::make(1, 2, {{1}, {2}, {-1}, {-2}}); }
GitData atiyah() { return GitData::make(1, 2, {{1}, {1}, {-1}, {-1}}); }
GitData six_chars() {
  return GitData::make(2, 3, {{1, 0}, {1, 0}, {0, 1}, {-1, 0}, {-1, 0}, {0, -1}});
}

RatVec rv(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

KModel model_for(const GitData& g, const RatVec& theta, int side) {
  FixedPointAtlas atlas = fixed_points(g.chars, stability(theta));
  auto scalars = std::make_shared<ScalarContext>(session_order(atlas),
                                                 lambda_variable_names(g.chars));
  return make_kmodel(scalars, g.chars, stability(theta), side);
}

}  // namespace

TEST_CASE("weighted cotangent restriction values") {
  GitData g = tstar_p12();
  KModel plus = model_for(g, rv({1}), kSidePlus);
  REQUIRE(plus.points() == 3);

  // R_1 at the twisted point of delta={2}: c = 1/2, value -L1*L2^(-1/2).
  UnitValue u = restrict_unit(plus, r_symbol(g.chars, 0), 2);
  CHECK(u.root == Rat(1, 2));
  CHECK(u.exps == (RatVec{Rat(1), Rat(-1, 2), Rat(0)}));

  // hbar restricts to Lh everywhere.
  for (int q = 0; q < plus.points(); ++q) {
    UnitValue h = restrict_unit(plus, hbar_symbol(g.chars), q);
    CHECK(h.root == 0);
    CHECK(h.exps == (RatVec{Rat(0), Rat(0), Rat(1)}));
  }

  // R_i restricts to 1 on its own anticone.
  for (int q = 0; q < plus.points(); ++q) {
    const FixedPoint& fp = plus.atlas.points[size_t(plus.atlas.inertia[size_t(q)].point)];
    for (int i : fp.delta) CHECK(restrict_unit(plus, r_symbol(g.chars, i), q) == UnitValue::one(3));
  }
}

TEST_CASE("kclass arithmetic and side guards") {
  GitData g = tstar_p12();
  KModel plus = model_for(g, rv({1}), kSidePlus);
  KModel minus = model_for(g, rv({-1}), kSideMinus);

  KClass h = kclass(plus, hbar_symbol(g.chars));
  for (int i = 0; i < g.n; ++i)
    CHECK(kclass(plus, r_symbol(g.chars, i)) * kclass(plus, r_symbol(g.chars, g.n + i)) == h);
  CHECK(kclass(plus, r_symbol(g.chars, 2)) * kclass(plus, s_symbol(g.chars, 2)) == kclass_one(plus));

  IntVec p{Int(3)}, q{Int(-2)}, pq{Int(1)};
  CHECK(kclass(plus, line_bundle(g.chars, p)) * kclass(plus, line_bundle(g.chars, q)) ==
        kclass(plus, line_bundle(g.chars, pq)));

  KClass hm = kclass(minus, hbar_symbol(g.chars));
  CHECK_THROWS_AS((void)(h * hm), SideMismatch);
  CHECK_THROWS_AS((void)(h == hm), SideMismatch);
  CHECK((h - h).is_zero());
}

TEST_CASE("structure basis is block diagonal with invertible blocks") {
  GitData g = tstar_p12();
  KModel minus = model_for(g, rv({-1}), kSideMinus);
  auto basis = structure_basis(minus);
  REQUIRE(basis.size() == 3);  // delta={3} has 1 class, delta={4} has 2
  CHECK(basis[0].point == 0);
  CHECK(basis[1].point == 1);
  CHECK(basis[2].point == 1);

  for (const auto& bc : basis)
    for (int q = 0; q < minus.points(); ++q)
      if (minus.atlas.inertia[size_t(q)].point != bc.point)
        CHECK(bc.cls.values[size_t(q)].is_zero());

  for (int p = 0; p < 2; ++p) {
    const FixedPoint& fp = minus.atlas.points[size_t(p)];
    int order = int(fp.elements.size());
    ScalarMatrix block;
    for (const auto& bc : basis) {
      if (bc.point != p) continue;
      std::vector<Scalar> row;
      for (int el = 0; el < order; ++el)
        row.push_back(bc.cls.values[size_t(minus.atlas.inertia_index(p, el))]);
      block.push_back(std::move(row));
    }
    REQUIRE(int(block.size()) == order);
    CHECK_FALSE(scalar_det(block).is_zero());
  }

  // The trivial-character class is the bare product of the complement factors.
  KClass bare = structure_class_with_lift(minus, 0, IntVec{Int(0)});
  CHECK(bare == basis[0].cls);
}

TEST_CASE("products with non-anticone complement vanish everywhere") {
  GitData g = tstar_p12();
  KModel plus = model_for(g, rv({1}), kSidePlus);
  // Complement of {1,2} is {3,4}, not a plus-side anticone.
  KClass prod = (kclass_one(plus) - kclass(plus, s_symbol(g.chars, 0))) *
                (kclass_one(plus) - kclass(plus, s_symbol(g.chars, 1)));
  CHECK(prod.is_zero());
  // Complement of {3,4} is {1,2}, which is an anticone: product survives.
  KClass keep = (kclass_one(plus) - kclass(plus, s_symbol(g.chars, 2))) *
                (kclass_one(plus) - kclass(plus, s_symbol(g.chars, 3)));
  CHECK_FALSE(keep.is_zero());
}

TEST_CASE("relation report passes on all bundled data") {
  struct Case {
    GitData g;
    RatVec theta;
  };
  std::vector<Case> cases = {
      {tstar_p12(), rv({1})},  {tstar_p12(), rv({-1})}, {atiyah(), rv({1})},
      {atiyah(), rv({-1})},    {six_chars(), rv({1, 1})}, {six_chars(), rv({-1, 1})},
  };
  for (auto& c : cases) {
    auto checks = verify_relations(c.g, c.theta);
    CHECK(checks.size() >= 6);
    for (auto& chk : checks) {
      INFO(chk.name, ": ", chk.detail);
      CHECK(chk.pass);
    }
  }
}

TEST_CASE("shifting a character lift rescales the class by a constant unit") {
  GitData g = tstar_p12();
  KModel minus = model_for(g, rv({-1}), kSideMinus);
  // delta={4} (0-based {3}), nontrivial character: shift the lift by D_4.
  const FixedPoint& fp = minus.atlas.points[1];
  IntVec rho = fp.char_lifts[1];
  IntVec shifted = rho;
  for (size_t k = 0; k < rho.size(); ++k) shifted[k] += g.chars.characters[3][k];
  KClass a = structure_class_with_lift(minus, 1, rho);
  KClass b = structure_class_with_lift(minus, 1, shifted);
  RatVec comp(size_t(g.chars.lambda_count) + 1, Rat(0));
  for (size_t k = 0; k < comp.size(); ++k) comp[k] = -Rat(g.chars.twists[3][k]);
  Scalar unit = UnitValue(Rat(0), comp).to_scalar(*minus.scalars);
  CHECK(b == a * unit);
}
