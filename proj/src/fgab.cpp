#include "wallcross/fgab.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace wallcross {

Rat parse_rat(const std::string& s) {
  auto is_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  std::string num_digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
  if (!is_digits(num_digits) || !is_digits(den))
    throw NonRationalNumber("not an exact rational: '" + s + "'");
  Int p_num(num), p_den(den);
  if (p_den == 0) throw NonRationalNumber("zero denominator: '" + s + "'");
  Rat q(p_num, p_den);
  q.canonicalize();
  return q;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    assert(int(rows[i].size()) == c);
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<IntVec>& cols) {
  int c = int(cols.size());
  int r = c ? int(cols[0].size()) : 0;
  IntMatrix m(r, c);
  for (int j = 0; j < c; ++j) {
    assert(int(cols[j].size()) == r);
    for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMatrix::row(int i) const {
  IntVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

IntVec IntMatrix::col(int j) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  assert(cols_ == o.rows_);
  IntMatrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) p.at(i, j) += at(i, k) * o.at(k, j);
    }
  return p;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  assert(int(x.size()) == cols_);
  IntVec y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : e_)
    if (x != 0) return false;
  return true;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::addmul_row(int dst, int src, const Int& c) {
  for (int j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::addmul_col(int dst, int src, const Int& c) {
  for (int i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
  std::vector<Int> f;
  for (int i = 0; i < rank; ++i) f.push_back(s.at(i, i));
  return f;
}

namespace {

// Elementary operations applied to s while maintaining a = u * s * v together
// with the tracked inverses.
struct SnfState {
  IntMatrix s, u, u_inv, v, v_inv;

  void swap_rows(int i, int j) {
    s.swap_rows(i, j);
    u.swap_cols(i, j);
    u_inv.swap_rows(i, j);
  }
  void swap_cols(int i, int j) {
    s.swap_cols(i, j);
    v.swap_rows(i, j);
    v_inv.swap_cols(i, j);
  }
  void negate_row(int i) {
    s.negate_row(i);
    u.negate_col(i);
    u_inv.negate_row(i);
  }
  void addmul_row(int dst, int src, const Int& c) {
    s.addmul_row(dst, src, c);
    u.addmul_col(src, dst, -c);
    u_inv.addmul_row(dst, src, c);
  }
  void addmul_col(int dst, int src, const Int& c) {
    s.addmul_col(dst, src, c);
    v.addmul_row(src, dst, -c);
    v_inv.addmul_col(dst, src, c);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const int m = a.rows(), n = a.cols();
  SnfState st{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n),
              IntMatrix::identity(n)};
  const int kmax = std::min(m, n);
  int k = 0;
  for (; k < kmax; ++k) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix, lowest (i, j) on ties.
      int pi = -1, pj = -1;
      Int best;
      for (int i = k; i < m; ++i)
        for (int j = k; j < n; ++j) {
          const Int& x = st.s.at(i, j);
          if (x == 0) continue;
          Int ax = abs(x);
          if (pi < 0 || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) goto done;
      st.swap_rows(k, pi);
      st.swap_cols(k, pj);
      if (st.s.at(k, k) < 0) st.negate_row(k);

      bool reduced = true;
      for (int i = k + 1; i < m; ++i) {
        if (st.s.at(i, k) == 0) continue;
        Int q = fdiv(st.s.at(i, k), st.s.at(k, k));
        st.addmul_row(i, k, -q);
        if (st.s.at(i, k) != 0) reduced = false;
      }
      for (int j = k + 1; j < n; ++j) {
        if (st.s.at(k, j) == 0) continue;
        Int q = fdiv(st.s.at(k, j), st.s.at(k, k));
        st.addmul_col(j, k, -q);
        if (st.s.at(k, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // Pull a non-multiple of the pivot into reach, if any remains.
      const Int& d = st.s.at(k, k);
      int bad = -1;
      for (int i = k + 1; i < m && bad < 0; ++i)
        for (int j = k + 1; j < n; ++j)
          if (st.s.at(i, j) % d != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      st.addmul_row(k, bad, Int(1));
    }
  }
done:
  SmithDecomposition d;
  d.s = st.s;
  d.u = st.u;
  d.u_inv = st.u_inv;
  d.v = st.v;
  d.v_inv = st.v_inv;
  d.rank = 0;
  for (int i = 0; i < kmax; ++i)
    if (d.s.at(i, i) != 0) ++d.rank;
  return d;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const int m = h.rows(), n = h.cols();
  int next = 0;
  for (int i = 0; i < m && next < n; ++i) {
    for (;;) {
      int jbest = -1;
      Int best;
      for (int j = next; j < n; ++j) {
        const Int& x = h.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (jbest < 0 || ax < best) {
          best = ax;
          jbest = j;
        }
      }
      if (jbest < 0) break;
      h.swap_cols(next, jbest);
      if (h.at(i, next) < 0) h.negate_col(next);
      bool clean = true;
      for (int j = next + 1; j < n; ++j) {
        if (h.at(i, j) == 0) continue;
        Int q = fdiv(h.at(i, j), h.at(i, next));
        h.addmul_col(j, next, -q);
        if (h.at(i, j) != 0) clean = false;
      }
      if (!clean) continue;
      for (int j = 0; j < next; ++j) {
        Int q = fdiv(h.at(i, j), h.at(i, next));
        if (q != 0) h.addmul_col(j, next, -q);
      }
      ++next;
      break;
    }
  }
  return h;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  const int n = a.cols();
  const int k = n - d.rank;
  IntMatrix ker(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) ker.at(i, j) = d.v_inv.at(i, d.rank + j);
  return hermite_normal_form(ker);
}

Int FgAbelianGroup::torsion_order() const {
  Int o(1);
  for (const Int& d : torsion) o *= d;
  return o;
}

CokernelData cokernel(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  const int m = a.rows();
  CokernelData out;
  out.group.free_rank = m - d.rank;
  std::vector<int> torsion_rows;
  for (int i = 0; i < d.rank; ++i)
    if (d.s.at(i, i) >= 2) {
      out.group.torsion.push_back(d.s.at(i, i));
      torsion_rows.push_back(i);
    }
  out.projection = IntMatrix(out.group.coord_count(), m);
  for (int i = 0; i < out.group.free_rank; ++i)
    for (int j = 0; j < m; ++j) out.projection.at(i, j) = d.u_inv.at(d.rank + i, j);
  for (size_t t = 0; t < torsion_rows.size(); ++t) {
    const Int& dt = out.group.torsion[t];
    for (int j = 0; j < m; ++j) {
      Int x = d.u_inv.at(torsion_rows[t], j) % dt;
      if (x < 0) x += dt;
      out.projection.at(out.group.free_rank + int(t), j) = x;
    }
  }
  return out;
}

IntMatrix gale_dual(const IntMatrix& beta, const FgAbelianGroup& target) {
  const int f = target.free_rank;
  const int t = int(target.torsion.size());
  if (beta.rows() != f + t)
    throw ValidationError("gale_dual: coordinate row count does not match target group");
  const int n = beta.cols();
  IntMatrix lifted(f + t, n + t);
  for (int i = 0; i < f + t; ++i)
    for (int j = 0; j < n; ++j) lifted.at(i, j) = beta.at(i, j);
  for (int i = 0; i < t; ++i) lifted.at(f + i, n + i) = target.torsion[i];

  SmithDecomposition d = smith_normal_form(lifted);
  if (d.rank < f + t) throw NotSurjective("gale_dual: map is not onto the target group");
  for (int i = 0; i < d.rank; ++i)
    if (d.s.at(i, i) != 1) throw NotSurjective("gale_dual: map is not onto the target group");

  IntMatrix full = kernel_basis(lifted);
  IntMatrix projected(n, full.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < full.cols(); ++j) projected.at(i, j) = full.at(i, j);
  return hermite_normal_form(projected);
}

IntVec reduce_mod_lattice(const IntVec& v, const IntMatrix& basis) {
  IntMatrix h = hermite_normal_form(basis);
  const int r = h.rows();
  IntVec w = v;
  for (int j = 0; j < h.cols(); ++j) {
    int p = -1;
    for (int i = 0; i < r; ++i)
      if (h.at(i, j) != 0) {
        p = i;
        break;
      }
    if (p < 0) break;  // zero columns trail
    assert(h.at(p, j) > 0);
    Int q = fdiv(w[p], h.at(p, j));
    if (q == 0) continue;
    for (int k = 0; k < r; ++k) w[k] -= q * h.at(k, j);
  }
  return w;
}

IntVec complete_to_basis(const IntMatrix& saturated_cols) {
  SmithDecomposition d = smith_normal_form(saturated_cols);
  const int r = saturated_cols.rows();
  if (d.rank != saturated_cols.cols() || d.rank != r - 1)
    throw ComputationError("complete_to_basis: expected a saturated corank-1 lattice");
  for (int i = 0; i < d.rank; ++i)
    if (d.s.at(i, i) != 1)
      throw ComputationError("complete_to_basis: lattice is not saturated");
  return d.u.col(r - 1);
}

int rat_rank(RatMatrix m) {
  const int rows = int(m.size());
  const int cols = rows ? int(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace wallcross
