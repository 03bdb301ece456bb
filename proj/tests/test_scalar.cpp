#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wallcross/scalar.hpp"

using namespace wallcross;

namespace {

std::vector<Int> ipoly(std::initializer_list<int> xs) {
  std::vector<Int> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

CycloNum random_cyclo(const CycloContext& cx, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  CycloNum x(cx, Rat(0));
  for (int k = 0; k < cx.degree; ++k) {
    Rat q(num(rng), den(rng));
    q.canonicalize();
    x.c[size_t(k)] = q;
  }
  return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(CycloContext(1).minpoly == ipoly({-1, 1}));
  CHECK(CycloContext(2).minpoly == ipoly({1, 1}));
  CHECK(CycloContext(3).minpoly == ipoly({1, 1, 1}));
  CHECK(CycloContext(4).minpoly == ipoly({1, 0, 1}));
  CHECK(CycloContext(5).minpoly == ipoly({1, 1, 1, 1, 1}));
  CHECK(CycloContext(6).minpoly == ipoly({1, -1, 1}));
  CHECK(CycloContext(8).minpoly == ipoly({1, 0, 0, 0, 1}));
  CHECK(CycloContext(12).minpoly == ipoly({1, 0, -1, 0, 1}));
}

TEST_CASE("roots of unity multiply by adding angles") {
  for (long m : {1L, 2L, 3L, 4L, 6L, 8L, 12L, 15L}) {
    CycloContext cx(m);
    CHECK(cx.order == m);
    CycloNum one(cx, Rat(1));
    CycloNum zeta = root_of_unity(cx, Rat(1, m));
    CycloNum power = one, sum(cx, Rat(0));
    for (long k = 0; k < m; ++k) {
      CHECK(power == root_of_unity(cx, Rat(k, m)));
      sum += power;
      power *= zeta;
    }
    CHECK(power == one);  // zeta^m = 1
    CHECK(sum == (m == 1 ? one : CycloNum(cx, Rat(0))));
  }
}

TEST_CASE("gaussian integer arithmetic in Q(i)") {
  CycloContext cx(4);
  CycloNum i = root_of_unity(cx, Rat(1, 4));
  CycloNum one(cx, Rat(1));
  CHECK(i * i == -one);
  CycloNum a = one + i, b = one - i;
  CHECK(a * b == CycloNum(cx, Rat(2)));
  CHECK(a.inverse() == b * CycloNum(cx, Rat(1, 2)));
  CHECK((a / b) == i);
  CHECK(a.str() == "z + 1");
  CHECK((-i).str() == "-z");
  CHECK(CycloNum(cx, Rat(0)).str() == "0");
}

TEST_CASE("root of unity needs compatible order") {
  CycloContext cx(4);
  CHECK_THROWS_AS(root_of_unity(cx, Rat(1, 3)), std::domain_error);
  CycloContext cx12(12);
  CycloNum w = root_of_unity(cx12, Rat(1, 3));
  CycloNum one(cx12, Rat(1));
  CHECK(w * w + w + one == CycloNum(cx12, Rat(0)));
}

TEST_CASE("field axioms on random elements") {
  CycloContext cx(12);
  std::mt19937 rng(77);
  CycloNum one(cx, Rat(1));
  for (int trial = 0; trial < 40; ++trial) {
    CycloNum x = random_cyclo(cx, rng), y = random_cyclo(cx, rng),
             z = random_cyclo(cx, rng);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    if (!x.is_zero()) CHECK(x * x.inverse() == one);
  }
}

TEST_CASE("galois action is a field automorphism") {
  CycloContext cx(12);
  std::mt19937 rng(78);
  for (long a : {1L, 5L, 7L, 11L}) {
    CHECK(galois(root_of_unity(cx, Rat(1, 12)), a) == root_of_unity(cx, Rat(a, 12)));
    for (int trial = 0; trial < 10; ++trial) {
      CycloNum x = random_cyclo(cx, rng), y = random_cyclo(cx, rng);
      CHECK(galois(x * y, a) == galois(x, a) * galois(y, a));
      CHECK(galois(x + y, a) == galois(x, a) + galois(y, a));
      CHECK(galois(galois(x, 5), 7) == galois(x, 35));
    }
  }
  CHECK_THROWS_AS(galois(root_of_unity(cx, Rat(0)), 4), std::domain_error);
}

TEST_CASE("laurent polynomial arithmetic") {
  ScalarContext cx(4, {"x", "y"});
  CycloNum one(cx.cyclo, Rat(1));
  LaurentPoly x = LaurentPoly::monomial(cx, {Rat(1), Rat(0)}, one);
  LaurentPoly y = LaurentPoly::monomial(cx, {Rat(0), Rat(1)}, one);
  LaurentPoly c1(cx, Rat(1));
  CHECK((c1 - x) * (c1 + x) == c1 - x * x);
  CHECK((x + y) - y == x);
  CHECK((x - x).is_zero());
  LaurentPoly half = LaurentPoly::monomial(cx, {Rat(1, 2), Rat(0)}, one);
  CHECK(half * half == x);
  CHECK((c1 - x * y).str() == "1 - x*y");
  LaurentPoly m = LaurentPoly::monomial(cx, {Rat(1, 2), Rat(-1)}, one);
  CHECK(m.str() == "x^(1/2)*y^(-1)");
  CycloNum i = root_of_unity(cx.cyclo, Rat(1, 4));
  CHECK(LaurentPoly::monomial(cx, {Rat(1), Rat(0)}, i).str() == "(z)*x");
}

TEST_CASE("scalar fractions normalize and compare exactly") {
  ScalarContext cx(4, {"x", "y"});
  CycloNum one(cx.cyclo, Rat(1));
  LaurentPoly x = LaurentPoly::monomial(cx, {Rat(1), Rat(0)}, one);
  LaurentPoly c1(cx, Rat(1));

  // Exact division collapses to a polynomial.
  Scalar collapsed(c1 - x * x, c1 - x);
  CHECK(collapsed.den == c1);
  CHECK(collapsed.num == c1 + x);

  Scalar a(c1, c1 - x), b(c1, c1 + x);
  CHECK(a + b == Scalar(LaurentPoly(cx, Rat(2)), c1 - x * x));
  CHECK(a * b == Scalar(c1, c1 - x * x));
  CHECK(a - a == Scalar::zero(cx));
  CHECK(a / a == Scalar::one(cx));
  CHECK(a.inverse() * a == Scalar::one(cx));
  CHECK_THROWS_AS(Scalar(c1, LaurentPoly(cx, Rat(0))), std::domain_error);
  CHECK_THROWS_AS(Scalar::one(cx) / Scalar::zero(cx), std::domain_error);

  // Fraction equality across shifted representations.
  CHECK(Scalar(c1, x - x * x) == Scalar(c1, x) * Scalar(c1, c1 - x));
  // Denominator normal form: least exponent zero, leading coefficient one.
  Scalar shifted(c1, x - x * x);
  CHECK(shifted.den.terms.begin()->first == RatVec{Rat(0), Rat(0)});
  CHECK(shifted.den.terms.rbegin()->second == one);
}

TEST_CASE("scalar galois conjugation") {
  ScalarContext cx(4, {"x"});
  CycloNum one(cx.cyclo, Rat(1));
  CycloNum i = root_of_unity(cx.cyclo, Rat(1, 4));
  LaurentPoly x = LaurentPoly::monomial(cx, {Rat(1)}, one);
  LaurentPoly c1(cx, Rat(1));
  Scalar s(LaurentPoly::monomial(cx, {Rat(1)}, i), c1 - LaurentPoly::monomial(cx, {Rat(0)}, i));
  Scalar conj = s.galois_conjugate(3);
  Scalar expect(LaurentPoly::monomial(cx, {Rat(1)}, -i),
                c1 + LaurentPoly::monomial(cx, {Rat(0)}, i));
  CHECK(conj == expect);
  CHECK(s.galois_conjugate(1) == s);
}

TEST_CASE("unit values form a group and embed as monomials") {
  UnitValue u(Rat(1, 3), {Rat(1, 2)});
  UnitValue cube = u.pow(Int(3));
  CHECK(cube.root == 0);
  CHECK(cube.exps == RatVec{Rat(3, 2)});
  CHECK(u * u.inverse() == UnitValue::one(1));
  UnitValue r = u.principal_root(2);
  CHECK(r.root == Rat(1, 6));
  CHECK(r.exps == RatVec{Rat(1, 4)});
  CHECK(r * r == u);
  CHECK(u.pow(Int(-1)) == u.inverse());

  ScalarContext cx(6, {"L"});
  Scalar s = u.to_scalar(cx);
  CHECK(s.num.terms.size() == 1);
  CHECK(s.num.terms.begin()->first == RatVec{Rat(1, 2)});
  CHECK(s.num.terms.begin()->second == root_of_unity(cx.cyclo, Rat(1, 3)));
  // Wrapping: root stays in [0,1).
  UnitValue w(Rat(5, 6), {Rat(0)});
  CHECK((w * w).root == Rat(2, 3));
}

TEST_CASE("scalar random consistency") {
  ScalarContext cx(3, {"x", "y"});
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> ex(-2, 2);
  auto random_poly = [&] {
    LaurentPoly p(cx);
    for (int t = 0; t < 3; ++t)
      p.add_term({Rat(ex(rng)), Rat(ex(rng))},
                 CycloNum(cx.cyclo, Rat(coef(rng))));
    return p;
  };
  for (int trial = 0; trial < 30; ++trial) {
    LaurentPoly p = random_poly(), q = random_poly(), r = random_poly();
    if (q.is_zero() || r.is_zero()) continue;
    Scalar a(p, q), b(q, r);
    CHECK(a * b == Scalar(p, r));
    CHECK((a + b) * Scalar(q * r) == Scalar(p * r + q * q));
    if (!p.is_zero()) CHECK(a * a.inverse() == Scalar::one(cx));
  }
}
