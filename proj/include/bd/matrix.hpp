#pragma once
// Dense exact linear algebra over a field F (see field.hpp).
//
// Echelon forms are computed with a fixed deterministic pivot policy —
// columns left to right, first row with a nonzero entry — so RREF matrices,
// kernel bases and complement tests are canonical for a given input.  Over
// the rationals the forward elimination is fraction-free (Bareiss) on
// denominator-cleared integer rows; over GF(p) plain Gauss-Jordan is used.

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "bd/field.hpp"

namespace bd {

template <class F>
struct Matrix {
  using Elem = typename F::Elem;

  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const Elem& fill)
      : rows(r), cols(c), a(r * c, fill) {}

  Elem& at(std::size_t i, std::size_t j) {
    assert(i < rows && j < cols);
    return a[i * cols + j];
  }
  const Elem& at(std::size_t i, std::size_t j) const {
    assert(i < rows && j < cols);
    return a[i * cols + j];
  }
};

template <class F>
using Vec = std::vector<typename F::Elem>;

// ------------------------------------------------------------ constructors --

template <class F>
Matrix<F> mat_zeros(const F& K, std::size_t r, std::size_t c) {
  return Matrix<F>(r, c, K.zero());
}

template <class F>
Matrix<F> mat_identity(const F& K, std::size_t n) {
  Matrix<F> I = mat_zeros(K, n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = K.one();
  return I;
}

template <class F>
Vec<F> vec_zeros(const F& K, std::size_t n) {
  return Vec<F>(n, K.zero());
}

template <class F>
Vec<F> vec_unit(const F& K, std::size_t n, std::size_t i) {
  Vec<F> v = vec_zeros(K, n);
  v[i] = K.one();
  return v;
}

// ------------------------------------------------------------- arithmetic --

template <class F>
bool mat_eq(const F& K, const Matrix<F>& A, const Matrix<F>& B) {
  if (A.rows != B.rows || A.cols != B.cols) return false;
  for (std::size_t i = 0; i < A.a.size(); ++i)
    if (!K.eq(A.a[i], B.a[i])) return false;
  return true;
}

template <class F>
bool mat_is_zero(const F& K, const Matrix<F>& A) {
  for (const auto& x : A.a)
    if (!K.is_zero(x)) return false;
  return true;
}

template <class F>
Matrix<F> mat_add(const F& K, const Matrix<F>& A, const Matrix<F>& B) {
  assert(A.rows == B.rows && A.cols == B.cols);
  Matrix<F> C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = K.add(C.a[i], B.a[i]);
  return C;
}

template <class F>
Matrix<F> mat_sub(const F& K, const Matrix<F>& A, const Matrix<F>& B) {
  assert(A.rows == B.rows && A.cols == B.cols);
  Matrix<F> C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = K.sub(C.a[i], B.a[i]);
  return C;
}

template <class F>
Matrix<F> mat_scale(const F& K, const typename F::Elem& s, const Matrix<F>& A) {
  Matrix<F> C = A;
  for (auto& x : C.a) x = K.mul(s, x);
  return C;
}

template <class F>
Matrix<F> mat_mul(const F& K, const Matrix<F>& A, const Matrix<F>& B) {
  assert(A.cols == B.rows);
  Matrix<F> C = mat_zeros(K, A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t k = 0; k < A.cols; ++k) {
      const auto& aik = A.at(i, k);
      if (K.is_zero(aik)) continue;
      for (std::size_t j = 0; j < B.cols; ++j) {
        const auto& bkj = B.at(k, j);
        if (K.is_zero(bkj)) continue;
        C.at(i, j) = K.add(C.at(i, j), K.mul(aik, bkj));
      }
    }
  }
  return C;
}

template <class F>
Matrix<F> mat_transpose(const F&, const Matrix<F>& A) {
  Matrix<F> T;
  T.rows = A.cols;
  T.cols = A.rows;
  T.a = A.a;  // placeholder sizing; overwritten below
  T.a.resize(A.a.size());
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T.a[j * A.rows + i] = A.at(i, j);
  return T;
}

template <class F>
Vec<F> mat_apply(const F& K, const Matrix<F>& A, const Vec<F>& x) {
  assert(A.cols == x.size());
  Vec<F> y = vec_zeros(K, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) {
      if (K.is_zero(A.at(i, j)) || K.is_zero(x[j])) continue;
      y[i] = K.add(y[i], K.mul(A.at(i, j), x[j]));
    }
  return y;
}

// Kronecker product with the left factor most significant: the (i1,i2)
// compound row index is i1*B.rows+i2, matching the convention that in a
// tensor product the leftmost leg varies slowest.
template <class F>
Matrix<F> mat_kron(const F& K, const Matrix<F>& A, const Matrix<F>& B) {
  Matrix<F> C = mat_zeros(K, A.rows * B.rows, A.cols * B.cols);
  for (std::size_t i1 = 0; i1 < A.rows; ++i1)
    for (std::size_t j1 = 0; j1 < A.cols; ++j1) {
      const auto& v = A.at(i1, j1);
      if (K.is_zero(v)) continue;
      for (std::size_t i2 = 0; i2 < B.rows; ++i2)
        for (std::size_t j2 = 0; j2 < B.cols; ++j2) {
          if (K.is_zero(B.at(i2, j2))) continue;
          C.at(i1 * B.rows + i2, j1 * B.cols + j2) = K.mul(v, B.at(i2, j2));
        }
    }
  return C;
}

// B(r, c) = A(r, pm[c]) — i.e. A composed with the basis permutation
// e_c -> e_{pm[c]} acting before A.
template <class F>
Matrix<F> mat_cols_permuted(const F&, const Matrix<F>& A,
                            const std::vector<std::size_t>& pm) {
  assert(pm.size() == A.cols);
  Matrix<F> B;
  B.rows = A.rows;
  B.cols = A.cols;
  B.a.resize(A.a.size());
  for (std::size_t r = 0; r < A.rows; ++r)
    for (std::size_t c = 0; c < A.cols; ++c) B.a[r * A.cols + c] = A.at(r, pm[c]);
  return B;
}

template <class F>
Matrix<F> mat_stack_rows(const F&, const Matrix<F>& A, const Matrix<F>& B) {
  if (A.rows == 0) return B;
  if (B.rows == 0) return A;
  assert(A.cols == B.cols);
  Matrix<F> C;
  C.rows = A.rows + B.rows;
  C.cols = A.cols;
  C.a = A.a;
  C.a.insert(C.a.end(), B.a.begin(), B.a.end());
  return C;
}

template <class F>
Matrix<F> mat_concat_cols(const F& K, const Matrix<F>& A, const Matrix<F>& B) {
  if (A.cols == 0) return B;
  if (B.cols == 0) return A;
  assert(A.rows == B.rows);
  Matrix<F> C = mat_zeros(K, A.rows, A.cols + B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

template <class F>
Matrix<F> mat_from_cols(const F& K, std::size_t ambient,
                        const std::vector<Vec<F>>& cols) {
  Matrix<F> C = mat_zeros(K, ambient, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    assert(cols[j].size() == ambient);
    for (std::size_t i = 0; i < ambient; ++i) C.at(i, j) = cols[j][i];
  }
  return C;
}

template <class F>
Vec<F> mat_col(const F&, const Matrix<F>& A, std::size_t j) {
  Vec<F> v;
  v.reserve(A.rows);
  for (std::size_t i = 0; i < A.rows; ++i) v.push_back(A.at(i, j));
  return v;
}

template <class F>
Vec<F> mat_row(const F&, const Matrix<F>& A, std::size_t i) {
  Vec<F> v;
  v.reserve(A.cols);
  for (std::size_t j = 0; j < A.cols; ++j) v.push_back(A.at(i, j));
  return v;
}

// ---------------------------------------------------------------- echelon --

template <class F>
struct Echelon {
  Matrix<F> R;                      // RREF, exactly rank() rows, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row, increasing
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

// Gauss-Jordan RREF; works over any field.
template <class F>
Echelon<F> rref_gauss(const F& K, Matrix<F> A) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t sel = r;
    while (sel < A.rows && K.is_zero(A.at(sel, c))) ++sel;
    if (sel == A.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(r, j));
    const auto piv = K.inv(A.at(r, c));
    for (std::size_t j = c; j < A.cols; ++j) A.at(r, j) = K.mul(piv, A.at(r, j));
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == r || K.is_zero(A.at(i, c))) continue;
      const auto f = A.at(i, c);
      for (std::size_t j = c; j < A.cols; ++j)
        A.at(i, j) = K.sub(A.at(i, j), K.mul(f, A.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon<F> e;
  e.pivots = std::move(pivots);
  e.R = mat_zeros(K, e.pivots.size(), A.cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < A.cols; ++j) e.R.at(i, j) = A.at(i, j);
  return e;
}

// Fraction-free forward elimination (one-step Bareiss) on denominator-cleared
// rows, followed by rational back-substitution to reach RREF.
inline Echelon<RatField> rref_bareiss(const RatField& K, const Matrix<RatField>& A) {
  const std::size_t m = A.rows, n = A.cols;
  std::vector<std::vector<mpz_class>> Z(m, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j)
      l = lcm(l, A.at(i, j).get_den());
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class q = A.at(i, j) * mpq_class(l);
      q.canonicalize();
      assert(q.get_den() == 1);
      Z[i][j] = q.get_num();
    }
  }

  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t sel = r;
    while (sel < m && Z[sel][c] == 0) ++sel;
    if (sel == m) continue;
    if (sel != r) Z[sel].swap(Z[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        mpz_class t = Z[r][c] * Z[i][j] - Z[i][c] * Z[r][j];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        Z[i][j] = q;
      }
      Z[i][c] = 0;
    }
    prev = Z[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Normalize pivot rows to rationals and eliminate upwards.
  const std::size_t rank = pivots.size();
  std::vector<std::vector<mpq_class>> R(rank, std::vector<mpq_class>(n, mpq_class(0)));
  for (std::size_t i = 0; i < rank; ++i) {
    mpq_class piv(Z[i][pivots[i]]);
    for (std::size_t j = pivots[i]; j < n; ++j) {
      R[i][j] = mpq_class(Z[i][j]) / piv;
      R[i][j].canonicalize();
    }
  }
  for (std::size_t i = rank; i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      mpq_class f = R[k][pivots[i]];
      if (f == 0) continue;
      for (std::size_t j = pivots[i]; j < n; ++j) R[k][j] -= f * R[i][j];
    }
  }

  Echelon<RatField> e;
  e.pivots = std::move(pivots);
  e.R = mat_zeros(K, rank, n);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < n; ++j) e.R.at(i, j) = R[i][j];
  return e;
}

}  // namespace detail

template <class F>
Echelon<F> rref(const F& K, const Matrix<F>& A) {
  return detail::rref_gauss(K, A);
}

inline Echelon<RatField> rref(const RatField& K, const Matrix<RatField>& A) {
  return detail::rref_bareiss(K, A);
}

template <class F>
std::size_t mat_rank(const F& K, const Matrix<F>& A) {
  return rref(K, A).rank();
}

// Canonical kernel basis: one column per non-pivot column of the RREF, in
// increasing column order, with a 1 in the free coordinate.
template <class F>
Matrix<F> kernel_basis(const F& K, const Matrix<F>& A) {
  Echelon<F> e = rref(K, A);
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < A.cols; ++c) {
      if (pi < e.pivots.size() && e.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix<F> Kb = mat_zeros(K, A.cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    Kb.at(f, k) = K.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      Kb.at(e.pivots[i], k) = K.neg(e.R.at(i, f));
  }
  return Kb;
}

// Particular solution of A x = b (free coordinates set to zero), if any.
template <class F>
std::optional<Vec<F>> mat_solve(const F& K, const Matrix<F>& A, const Vec<F>& b) {
  assert(b.size() == A.rows);
  Matrix<F> Ab = mat_concat_cols(K, A, mat_from_cols(K, A.rows, {b}));
  Echelon<F> e = rref(K, Ab);
  for (std::size_t p : e.pivots)
    if (p == A.cols) return std::nullopt;
  Vec<F> x = vec_zeros(K, A.cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    x[e.pivots[i]] = e.R.at(i, A.cols);
  return x;
}

// --------------------------------------------------------------- subspace --

// A subspace of F^ambient, stored as the RREF row basis (canonical).
template <class F>
struct Subspace {
  std::size_t ambient = 0;
  Matrix<F> rows;  // dim() x ambient, RREF
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return pivots.size(); }
};

template <class F>
Subspace<F> subspace_from_rows(const F& K, const Matrix<F>& M) {
  Echelon<F> e = rref(K, M);
  Subspace<F> s;
  s.ambient = M.cols;
  s.rows = std::move(e.R);
  s.pivots = std::move(e.pivots);
  return s;
}

template <class F>
Subspace<F> subspace_from_cols(const F& K, const Matrix<F>& M) {
  return subspace_from_rows(K, mat_transpose(K, M));
}

template <class F>
Subspace<F> subspace_zero(const F&, std::size_t ambient) {
  Subspace<F> s;
  s.ambient = ambient;
  s.rows.rows = 0;
  s.rows.cols = ambient;
  return s;
}

template <class F>
Subspace<F> subspace_full(const F& K, std::size_t ambient) {
  Subspace<F> s;
  s.ambient = ambient;
  s.rows = mat_identity(K, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots.push_back(i);
  return s;
}

// Canonical representative of x modulo the subspace: pivot coordinates are
// eliminated, so reduce(x) == 0 iff x lies in the subspace.
template <class F>
Vec<F> subspace_reduce(const F& K, const Subspace<F>& S, Vec<F> x) {
  assert(x.size() == S.ambient);
  for (std::size_t i = 0; i < S.dim(); ++i) {
    const auto f = x[S.pivots[i]];
    if (K.is_zero(f)) continue;
    for (std::size_t j = S.pivots[i]; j < S.ambient; ++j)
      x[j] = K.sub(x[j], K.mul(f, S.rows.at(i, j)));
  }
  return x;
}

template <class F>
bool subspace_contains(const F& K, const Subspace<F>& S, const Vec<F>& x) {
  Vec<F> r = subspace_reduce(K, S, x);
  for (const auto& v : r)
    if (!K.is_zero(v)) return false;
  return true;
}

template <class F>
bool subspace_eq(const F& K, const Subspace<F>& A, const Subspace<F>& B) {
  return A.ambient == B.ambient && A.pivots == B.pivots && mat_eq(K, A.rows, B.rows);
}

template <class F>
bool subspace_leq(const F& K, const Subspace<F>& A, const Subspace<F>& B) {
  if (A.ambient != B.ambient) return false;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (!subspace_contains(K, B, mat_row(K, A.rows, i))) return false;
  return true;
}

// The complement test of S: a matrix T with ker T = S, built directly from
// the RREF rows (row per free coordinate; no further elimination needed).
template <class F>
Matrix<F> complement_test(const F& K, const Subspace<F>& S) {
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < S.ambient; ++c) {
      if (pi < S.pivots.size() && S.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix<F> T = mat_zeros(K, free_cols.size(), S.ambient);
  for (std::size_t r = 0; r < free_cols.size(); ++r) {
    T.at(r, free_cols[r]) = K.one();
    for (std::size_t i = 0; i < S.dim(); ++i)
      T.at(r, S.pivots[i]) = K.neg(S.rows.at(i, free_cols[r]));
  }
  return T;
}

template <class F>
Subspace<F> subspace_sum(const F& K, const Subspace<F>& A, const Subspace<F>& B) {
  assert(A.ambient == B.ambient);
  return subspace_from_rows(K, mat_stack_rows(K, A.rows, B.rows));
}

template <class F>
Subspace<F> subspace_intersect(const F& K, const Subspace<F>& A, const Subspace<F>& B) {
  assert(A.ambient == B.ambient);
  Matrix<F> T = mat_stack_rows(K, complement_test(K, A), complement_test(K, B));
  return subspace_from_cols(K, kernel_basis(K, T));
}

template <class F>
Subspace<F> subspace_from_kernel(const F& K, const Matrix<F>& A) {
  return subspace_from_cols(K, kernel_basis(K, A));
}

// Non-pivot coordinates, i.e. the canonical basis words spanning a
// complement of S (used as graded quotient bases throughout).
template <class F>
std::vector<std::size_t> subspace_complement_coords(const Subspace<F>& S) {
  std::vector<std::size_t> free_cols;
  std::size_t pi = 0;
  for (std::size_t c = 0; c < S.ambient; ++c) {
    if (pi < S.pivots.size() && S.pivots[pi] == c)
      ++pi;
    else
      free_cols.push_back(c);
  }
  return free_cols;
}

}  // namespace bd
