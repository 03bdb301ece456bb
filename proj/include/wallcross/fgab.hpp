#pragma once

#include <optional>
#include <vector>

#include "wallcross/errors.hpp"
#include "wallcross/numeric.hpp"

namespace wallcross {

// Dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * size_t(cols)) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_cols(const std::vector<IntVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec col(int j) const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntVec apply(const IntVec& x) const;  // matrix * vector
  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool is_zero() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int j);
  void addmul_row(int dst, int src, const Int& c);  // row[dst] += c * row[src]
  void addmul_col(int dst, int src, const Int& c);

  std::string str() const;  // debugging aid

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// a = u * s * v with u, v unimodular; s diagonal, nonnegative, with the
// divisibility chain s_11 | s_22 | ... ; u_inv, v_inv are the tracked inverses.
struct SmithDecomposition {
  IntMatrix u, s, v;
  IntMatrix u_inv, v_inv;
  int rank = 0;
  std::vector<Int> invariant_factors() const;  // the nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Column-style Hermite normal form h = a * v: pivot rows strictly increase
// column by column, pivots positive, entries left of a pivot in its row lie in
// [0, pivot); zero columns trail. Canonical for the column lattice of a.
IntMatrix hermite_normal_form(const IntMatrix& a);

// Basis (columns, HNF-canonical) of the saturated lattice {x : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

struct FgAbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors, each >= 2, divisibility chain

  bool operator==(const FgAbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  int coord_count() const { return free_rank + int(torsion.size()); }
  // Order of the torsion part.
  Int torsion_order() const;
};

// Z^m / colspan(a) in invariant-factor presentation. projection has
// coord_count() rows and m columns; free coordinates come first, then torsion
// coordinates (each defined modulo its invariant factor, reduced into [0, d)).
struct CokernelData {
  FgAbelianGroup group;
  IntMatrix projection;
};

CokernelData cokernel(const IntMatrix& a);

// Characters of ker(beta) for beta : Z^N -> target, given by the coordinate
// matrix beta (coord_count rows, N columns; rows ordered free-then-torsion as
// produced by cokernel). Returns the N x r matrix whose rows are the
// characters D_i of the kernel lattice, i.e. the kernel inclusion written in
// an HNF-canonical kernel basis. Throws NotSurjective when beta is not onto.
IntMatrix gale_dual(const IntMatrix& beta, const FgAbelianGroup& target);

// Canonical coset representative of v modulo the lattice spanned by the
// columns of basis (entries over the HNF pivot rows reduced into the HNF box;
// the lattice may have any rank).
IntVec reduce_mod_lattice(const IntVec& v, const IntMatrix& basis);

// For a saturated rank r-1 column lattice inside Z^r, returns a vector
// completing it to a basis of Z^r.
IntVec complete_to_basis(const IntMatrix& saturated_cols);

// ---- rational linear algebra -------------------------------------------------

using RatMatrix = std::vector<RatVec>;

inline RatMatrix rat_matrix(const IntMatrix& a) {
  RatMatrix m(a.rows(), RatVec(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m[i][j] = Rat(a.at(i, j));
  return m;
}

int rat_rank(RatMatrix m);

// Solves a x = b by Gauss elimination with exact pivots; the RHS entries may
// live in any Q-module T with T +- T, Rat * T and an is_zero-compatible
// equality (Rat, EpsRat, ...). Returns nullopt when inconsistent; when the
// solution is not unique the free variables are set to zero (deterministic).
template <class T>
std::optional<std::vector<T>> solve_rational(RatMatrix a, std::vector<T> b) {
  const int m = int(a.size());
  const int n = m ? int(a[0].size()) : 0;
  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rat inv = 1 / a[r][c];
    for (int j = c; j < n; ++j) a[r][j] *= inv;
    b[r] = inv * b[r];
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (!(b[i] == T())) return std::nullopt;
  std::vector<T> x(n, T());
  for (int i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

}  // namespace wallcross
