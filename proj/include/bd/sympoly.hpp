#pragma once
// Symmetric powers on a fixed monomial basis: induced group actions,
// invariants, coinvariant dimensions, abelianization of tensor words, and
// exact division by linear forms (for rational-function-free Dunkl formulas).

#include <map>
#include <vector>

#include "bd/gmodule.hpp"
#include "bd/matrix.hpp"

namespace bd {

// Monomial basis of S^n over d variables: exponent vectors, first coordinate
// descending, then recursively on the rest.
struct SymBasis {
  std::size_t d = 0, n = 0;
  std::vector<std::vector<std::size_t>> exps;
  std::map<std::vector<std::size_t>, std::size_t> pos;
  std::size_t dim() const { return exps.size(); }
  std::size_t index(const std::vector<std::size_t>& e) const {
    auto it = pos.find(e);
    if (it == pos.end()) throw ComputeError("monomial outside basis");
    return it->second;
  }
};

namespace detail {
inline void sym_fill(std::size_t d, std::size_t n, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == d) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t e = n + 1; e-- > 0;) {
    cur.push_back(e);
    sym_fill(d, n - e, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

inline SymBasis sym_basis(std::size_t d, std::size_t n) {
  SymBasis b;
  b.d = d;
  b.n = n;
  if (d == 0) {
    if (n == 0) b.exps.push_back({});
  } else {
    std::vector<std::size_t> cur;
    detail::sym_fill(d, n, cur, b.exps);
  }
  for (std::size_t i = 0; i < b.exps.size(); ++i) b.pos.emplace(b.exps[i], i);
  return b;
}

// Abelianization V^{(x)n} -> S^n: tensor word to its monomial.
template <class F>
Matrix<F> symmetrization_matrix(const F& K, std::size_t d, std::size_t n) {
  SymBasis sb = sym_basis(d, n);
  Matrix<F> M = mat_zeros(K, sb.dim(), ipow(d, n));
  for (std::size_t w = 0; w < ipow(d, n); ++w) {
    std::vector<std::size_t> word = index_word(w, n, d);
    std::vector<std::size_t> e(d, 0);
    for (std::size_t t : word) ++e[t];
    M.at(sb.index(e), w) = K.one();
  }
  return M;
}

// Product S^a x S^b -> S^{a+b} on coordinates.
template <class F>
Vec<F> sym_mul(const F& K, std::size_t d, std::size_t a, const Vec<F>& pa,
               std::size_t b, const Vec<F>& pb) {
  SymBasis A = sym_basis(d, a), B = sym_basis(d, b), C = sym_basis(d, a + b);
  Vec<F> out = vec_zeros(K, C.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (K.is_zero(pa[i])) continue;
    for (std::size_t j = 0; j < B.dim(); ++j) {
      if (K.is_zero(pb[j])) continue;
      std::vector<std::size_t> e = A.exps[i];
      for (std::size_t t = 0; t < d; ++t) e[t] += B.exps[j][t];
      const std::size_t k = C.index(e);
      out[k] = K.add(out[k], K.mul(pa[i], pb[j]));
    }
  }
  return out;
}

// Induced action of g on S^n: expand the product of images of the variables.
template <class F>
Matrix<F> sym_rho(const GModule<F>& M, gid g, std::size_t n) {
  const F& K = M.K;
  const std::size_t d = M.d;
  SymBasis sb = sym_basis(d, n);
  Matrix<F> out = mat_zeros(K, sb.dim(), sb.dim());
  for (std::size_t c = 0; c < sb.dim(); ++c) {
    Vec<F> acc = vec_zeros(K, 1);
    acc[0] = K.one();
    std::size_t deg = 0;
    for (std::size_t var = 0; var < d; ++var)
      for (std::size_t rep = 0; rep < sb.exps[c][var]; ++rep) {
        Vec<F> lin = mat_col(K, M.of(g), var);  // image of the variable
        acc = sym_mul(K, d, deg, acc, 1, lin);
        ++deg;
      }
    for (std::size_t r = 0; r < sb.dim(); ++r) out.at(r, c) = acc[r];
  }
  return out;
}

// Invariants of S^n as a subspace in monomial coordinates (intersection of
// the fixed spaces of every group element; valid in all characteristics).
template <class F>
Subspace<F> sym_invariants(const GModule<F>& M, std::size_t n) {
  const F& K = M.K;
  SymBasis sb = sym_basis(M.d, n);
  Matrix<F> stack;
  stack.cols = sb.dim();
  for (gid g = 1; g < M.G->order(); ++g)
    stack = mat_stack_rows(
        K, stack, mat_sub(K, sym_rho(M, g, n), mat_identity(K, sb.dim())));
  if (stack.rows == 0) return subspace_full(K, sb.dim());
  return subspace_from_kernel(K, stack);
}

// Slices of the ideal generated by the positive-degree invariants, and the
// coinvariant-ring dimensions dim S^n - dim (ideal slice).
template <class F>
std::vector<Subspace<F>> invariant_ideal_slices(const GModule<F>& M, std::size_t N) {
  const F& K = M.K;
  const std::size_t d = M.d;
  std::vector<Subspace<F>> inv;
  for (std::size_t m = 0; m <= N; ++m) inv.push_back(sym_invariants(M, m));
  std::vector<Subspace<F>> out;
  for (std::size_t n = 0; n <= N; ++n) {
    SymBasis sn = sym_basis(d, n);
    Matrix<F> rows;
    rows.cols = sn.dim();
    for (std::size_t m = 1; m <= n; ++m) {
      SymBasis sa = sym_basis(d, n - m);
      for (std::size_t fi = 0; fi < inv[m].dim(); ++fi) {
        Vec<F> f = mat_row(K, inv[m].rows, fi);
        for (std::size_t mi = 0; mi < sa.dim(); ++mi) {
          Vec<F> mono = vec_unit(K, sa.dim(), mi);
          Vec<F> prod = sym_mul(K, d, n - m, mono, m, f);
          Matrix<F> one;
          one.rows = 1;
          one.cols = sn.dim();
          one.a = prod;
          rows = mat_stack_rows(K, rows, one);
        }
      }
    }
    out.push_back(subspace_from_rows(K, rows));
  }
  return out;
}

template <class F>
std::vector<std::size_t> coinvariant_dims(const GModule<F>& M, std::size_t N) {
  std::vector<Subspace<F>> J = invariant_ideal_slices(M, N);
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= N; ++n)
    dims.push_back(sym_basis(M.d, n).dim() - J[n].dim());
  return dims;
}

// Multiplication by a linear form as a matrix S^n -> S^{n+1}.
template <class F>
Matrix<F> mul_linear_matrix(const F& K, std::size_t d, std::size_t n,
                            const Vec<F>& lin) {
  SymBasis A = sym_basis(d, n), C = sym_basis(d, n + 1);
  Matrix<F> M = mat_zeros(K, C.dim(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Vec<F> prod = sym_mul(K, d, n, vec_unit(K, A.dim(), i), 1, lin);
    for (std::size_t r = 0; r < C.dim(); ++r) M.at(r, i) = prod[r];
  }
  return M;
}

// Exact division of p (degree n+1) by a nonzero linear form; throws if the
// division is not exact.
template <class F>
Vec<F> poly_divide_linear(const F& K, std::size_t d, std::size_t n1,
                          const Vec<F>& p, const Vec<F>& lin) {
  if (n1 == 0) throw ComputeError("cannot divide a constant by a linear form");
  Matrix<F> M = mul_linear_matrix(K, d, n1 - 1, lin);
  auto q = mat_solve(K, M, p);
  if (!q) throw ComputeError("polynomial is not divisible by the linear form");
  return *q;
}

// Partial derivative d/dx_j as a matrix S^n -> S^{n-1} (multiplicities taken
// in the coefficient field).
template <class F>
Matrix<F> sym_derivative(const F& K, std::size_t d, std::size_t n, std::size_t j) {
  SymBasis A = sym_basis(d, n), C = sym_basis(d, n - 1);
  Matrix<F> M = mat_zeros(K, C.dim(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (A.exps[i][j] == 0) continue;
    std::vector<std::size_t> e = A.exps[i];
    auto mult = K.zero();
    for (std::size_t t = 0; t < e[j]; ++t) mult = K.add(mult, K.one());
    --e[j];
    M.at(C.index(e), i) = mult;
  }
  return M;
}

}  // namespace bd
