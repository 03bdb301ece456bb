#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wallcross/fgab.hpp"

using namespace wallcross;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

Rat det(const IntMatrix& a) {
  REQUIRE(a.rows() == a.cols());
  RatMatrix m = rat_matrix(a);
  const int n = a.rows();
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

bool is_diagonal_chain(const IntMatrix& s, int rank) {
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (i != j && s.at(i, j) != 0) return false;
  for (int i = 0; i + 1 < rank; ++i)
    if (s.at(i + 1, i + 1) % s.at(i, i) != 0) return false;
  for (int i = 0; i < std::min(s.rows(), s.cols()); ++i)
    if (s.at(i, i) < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
  IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
  auto d = smith_normal_form(a);
  CHECK(d.rank == 2);
  CHECK(d.s.at(0, 0) == 1);
  CHECK(d.s.at(1, 1) == 6);
  CHECK(d.u * d.s * d.v == a);
}

TEST_CASE("smith decomposition properties on random matrices") {
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 1 + int(rng() % 5), n = 1 + int(rng() % 5);
    IntMatrix a = random_matrix(rng, m, n);
    auto d = smith_normal_form(a);
    CHECK(d.u * d.s * d.v == a);
    CHECK(d.u * d.u_inv == IntMatrix::identity(m));
    CHECK(d.u_inv * d.u == IntMatrix::identity(m));
    CHECK(d.v * d.v_inv == IntMatrix::identity(n));
    CHECK(is_diagonal_chain(d.s, d.rank));
    CHECK(rat_rank(rat_matrix(a)) == d.rank);
  }
}

TEST_CASE("invariant factors are unimodular invariants") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 4);
    auto base = smith_normal_form(a).invariant_factors();
    // Random elementary row/column operations do not change the factors.
    IntMatrix b = a;
    for (int k = 0; k < 6; ++k) {
      int what = rng() % 4;
      if (what == 0) b.swap_rows(int(rng() % 3), int(rng() % 3));
      if (what == 1) b.swap_cols(int(rng() % 4), int(rng() % 4));
      if (what == 2) {
        int i = int(rng() % 3), j = int(rng() % 3);
        if (i != j) b.addmul_row(i, j, Int(1 + rng() % 3));
      }
      if (what == 3) {
        int i = int(rng() % 4), j = int(rng() % 4);
        if (i != j) b.addmul_col(i, j, Int(-2 + int(rng() % 5)));
      }
    }
    CHECK(smith_normal_form(b).invariant_factors() == base);
  }
}

TEST_CASE("kernel of a Lawrence character row") {
  IntMatrix a = IntMatrix::from_rows({{1, 2, -1, -2}});
  auto d = smith_normal_form(a);
  CHECK(d.rank == 1);
  CHECK(d.s.at(0, 0) == 1);
  IntMatrix k = kernel_basis(a);
  CHECK(k.cols() == 3);
  CHECK((a * k).is_zero());
  // Saturated: the kernel basis extends to a basis of Z^4.
  auto dk = smith_normal_form(k);
  CHECK(dk.rank == 3);
  for (auto& f : dk.invariant_factors()) CHECK(f == 1);
}

TEST_CASE("kernel basis properties on random matrices") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 1 + int(rng() % 4), n = 1 + int(rng() % 6);
    IntMatrix a = random_matrix(rng, m, n);
    IntMatrix k = kernel_basis(a);
    CHECK((a * k).is_zero());
    CHECK(k.cols() == n - rat_rank(rat_matrix(a)));
    auto dk = smith_normal_form(k);
    CHECK(dk.rank == k.cols());
    for (auto& f : dk.invariant_factors()) CHECK(f == 1);
    CHECK(hermite_normal_form(k) == k);
  }
}

TEST_CASE("hermite normal form is a column-lattice canonical form") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 1 + int(rng() % 4), n = 1 + int(rng() % 4);
    IntMatrix a = random_matrix(rng, m, n);
    IntMatrix h = hermite_normal_form(a);
    CHECK(hermite_normal_form(h) == h);
    // Shuffle columns and apply unimodular column operations: same HNF.
    IntMatrix b = a;
    for (int k = 0; k < 8; ++k) {
      int what = rng() % 3;
      if (what == 0) b.swap_cols(int(rng() % n), int(rng() % n));
      if (what == 1) b.negate_col(int(rng() % n));
      if (what == 2) {
        int i = int(rng() % n), j = int(rng() % n);
        if (i != j) b.addmul_col(i, j, Int(-3 + int(rng() % 7)));
      }
    }
    CHECK(hermite_normal_form(b) == h);
  }
}

TEST_CASE("cokernel of multiplication by 2 on Z") {
  IntMatrix a = IntMatrix::from_rows({{2}});
  auto c = cokernel(a);
  CHECK(c.group.free_rank == 0);
  REQUIRE(c.group.torsion.size() == 1);
  CHECK(c.group.torsion[0] == 2);
  CHECK(c.projection.rows() == 1);
  CHECK(c.projection.at(0, 0) == 1);
}

TEST_CASE("cokernel of the empty map is free") {
  IntMatrix a(3, 0);
  auto c = cokernel(a);
  CHECK(c.group.free_rank == 3);
  CHECK(c.group.torsion.empty());
  CHECK(c.projection.rows() == 3);
}

TEST_CASE("cokernel projection kills the image") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 1 + int(rng() % 4), n = int(rng() % 5);
    IntMatrix a = random_matrix(rng, m, n);
    auto c = cokernel(a);
    IntMatrix pa = c.projection * a;
    for (int i = 0; i < c.group.free_rank; ++i)
      for (int j = 0; j < n; ++j) CHECK(pa.at(i, j) == 0);
    for (size_t t = 0; t < c.group.torsion.size(); ++t)
      for (int j = 0; j < n; ++j)
        CHECK(pa.at(c.group.free_rank + int(t), j) % c.group.torsion[t] == 0);
    // Projection is onto the free part: rank check.
    CHECK(rat_rank(rat_matrix(c.projection)) == c.projection.rows());
  }
}

TEST_CASE("gale dual of (1,2)") {
  IntMatrix beta = IntMatrix::from_rows({{1, 2}});
  FgAbelianGroup z{1, {}};
  IntMatrix d = gale_dual(beta, z);
  REQUIRE(d.rows() == 2);
  REQUIRE(d.cols() == 1);
  CHECK(d.at(0, 0) == 2);
  CHECK(d.at(1, 0) == -1);
}

TEST_CASE("gale dual rejects non-surjective maps") {
  IntMatrix beta = IntMatrix::from_rows({{2, 4}});
  FgAbelianGroup z{1, {}};
  CHECK_THROWS_AS(gale_dual(beta, z), NotSurjective);
}

TEST_CASE("gale dual sees torsion targets") {
  // beta : Z^2 -> Z x Z/2, e1 -> (1, 0), e2 -> (0, 1).
  IntMatrix beta = IntMatrix::from_rows({{1, 0}, {0, 1}});
  FgAbelianGroup target{1, {Int(2)}};
  IntMatrix d = gale_dual(beta, target);
  // Kernel = {(0, 2k)}: one character column (0, 2).
  REQUIRE(d.cols() == 1);
  CHECK(d.at(0, 0) == 0);
  CHECK(d.at(1, 0) == 2);
}

TEST_CASE("gale dual and cokernel roundtrip") {
  std::mt19937 rng(31337);
  int done = 0;
  while (done < 60) {
    int n = 2 + int(rng() % 4);
    int r = 1 + int(rng() % 2);
    IntMatrix chars = random_matrix(rng, n, r, -3, 3);
    if (rat_rank(rat_matrix(chars)) != r) continue;
    ++done;
    // chars columns span the lattice L inside Z^n; beta presents Z^n / L.
    auto c = cokernel(chars);
    IntMatrix back = gale_dual(c.projection, c.group);
    CHECK(back == hermite_normal_form(chars));
  }
}

TEST_CASE("lattice coset reduction") {
  std::mt19937 rng(2718);
  int done = 0;
  while (done < 60) {
    int r = 1 + int(rng() % 3);
    IntMatrix basis = random_matrix(rng, r, r, -4, 4);
    if (det(basis) == 0) continue;
    ++done;
    IntVec v(r);
    for (int i = 0; i < r; ++i) v[i] = Int(int(rng() % 21) - 10);
    IntVec red = reduce_mod_lattice(v, basis);
    CHECK(reduce_mod_lattice(red, basis) == red);
    // v - red lies in the lattice.
    IntVec diff(r);
    for (int i = 0; i < r; ++i) diff[i] = v[i] - red[i];
    auto sol = solve_rational(rat_matrix(basis), RatVec(diff.begin(), diff.end()));
    REQUIRE(sol.has_value());
    for (auto& q : *sol) CHECK(is_integer(q));
    // Any lattice translate reduces to the same representative.
    IntVec t(r);
    for (int k = 0; k < r; ++k) t[k] = Int(int(rng() % 5) - 2);
    IntVec shifted = v;
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) shifted[i] += t[k] * basis.at(i, k);
    CHECK(reduce_mod_lattice(shifted, basis) == red);
  }
}

TEST_CASE("basis completion of a saturated hyperplane lattice") {
  std::mt19937 rng(808);
  int done = 0;
  while (done < 60) {
    int r = 2 + int(rng() % 3);
    IntMatrix a = random_matrix(rng, 1, r, -4, 4);
    if (a.is_zero()) continue;
    IntMatrix k = kernel_basis(a);
    if (k.cols() != r - 1) continue;
    ++done;
    IntVec v = complete_to_basis(k);
    IntMatrix full(r, r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r - 1; ++j) full.at(i, j) = k.at(i, j);
      full.at(i, r - 1) = v[i];
    }
    Rat dd = det(full);
    CHECK((dd == 1 || dd == -1));
  }
}

TEST_CASE("rational solver") {
  RatMatrix a = {{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  auto x = solve_rational(a, RatVec{Rat(5), Rat(6)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(-4));
  CHECK((*x)[1] == Rat(9, 2));

  // Epsilon-extended right-hand side.
  auto y = solve_rational(a, EpsVec{EpsRat(Rat(0), Rat(1)), EpsRat(Rat(1), Rat(0))});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == EpsRat(Rat(1), Rat(-2)));
  CHECK((*y)[1] == EpsRat(Rat(-1, 2), Rat(3, 2)));

  RatMatrix sing = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  CHECK(!solve_rational(sing, RatVec{Rat(1), Rat(3)}).has_value());
}
