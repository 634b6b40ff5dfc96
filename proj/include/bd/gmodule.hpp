#pragma once
// Finite-dimensional modules over a group algebra kG: one matrix per group
// element, built either from explicit generator images or from named
// constructions (trivial, sign, permutation, regular, reflection).  Duals
// and tensor products follow the usual conventions: the dual action is
// g |-> transpose(rho(g^{-1})), so evaluation V* (x) V -> k is invariant.

#include <string>
#include <vector>

#include "bd/group.hpp"
#include "bd/matrix.hpp"

namespace bd {

template <class F>
struct GModule {
  const FinGroup* G = nullptr;
  F K;
  std::size_t d = 0;
  std::vector<Matrix<F>> rho;  // one per element id

  const Matrix<F>& of(gid g) const { return rho[g]; }
};

template <class F>
struct CheckReport {
  bool ok = true;
  std::string detail;
};

// ----------------------------------------------------------- constructors --

// Extend generator images along the BFS words of the group.
template <class F>
GModule<F> module_from_generator_matrices(const F& K, const FinGroup& G,
                                          const std::vector<Matrix<F>>& gen_mats) {
  if (gen_mats.size() != G.num_generators())
    throw ConfigError("module: need one matrix per group generator");
  const std::size_t d = gen_mats.empty() ? 0 : gen_mats[0].rows;
  for (const auto& m : gen_mats)
    if (m.rows != d || m.cols != d)
      throw ConfigError("module: generator matrices must be square of equal size");
  GModule<F> M;
  M.G = &G;
  M.K = K;
  M.d = d;
  M.rho.resize(G.order());
  M.rho[0] = mat_identity(K, d);
  // ids are BFS-ordered, so parents are always filled before children
  for (gid a = 1; a < G.order(); ++a)
    M.rho[a] = mat_mul(K, M.rho[G.bfs_parent(a)], gen_mats[G.bfs_gen(a)]);
  return M;
}

template <class F>
GModule<F> module_trivial(const F& K, const FinGroup& G, std::size_t d = 1) {
  GModule<F> M;
  M.G = &G;
  M.K = K;
  M.d = d;
  M.rho.assign(G.order(), mat_identity(K, d));
  return M;
}

// 1-dimensional module from a multiplicative character given element-wise.
template <class F>
GModule<F> module_character(const F& K, const FinGroup& G,
                            const std::vector<typename F::Elem>& values) {
  if (values.size() != G.order())
    throw ConfigError("character: need one value per group element");
  GModule<F> M;
  M.G = &G;
  M.K = K;
  M.d = 1;
  M.rho.resize(G.order());
  for (gid a = 0; a < G.order(); ++a) {
    M.rho[a] = mat_zeros(K, 1, 1);
    M.rho[a].at(0, 0) = values[a];
  }
  return M;
}

// Sign character of a permutation group (parity of the underlying permutation).
template <class F>
GModule<F> module_sign(const F& K, const FinGroup& G) {
  std::vector<typename F::Elem> vals(G.order());
  for (gid a = 0; a < G.order(); ++a) {
    const auto& p = G.perm(a);
    std::vector<bool> seen(p.size(), false);
    int parity = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0, j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = p[j];
        ++len;
      }
      parity ^= static_cast<int>((len - 1) & 1);
    }
    vals[a] = parity ? K.neg(K.one()) : K.one();
  }
  return module_character(K, G, vals);
}

// Permutation module k^degree.
template <class F>
GModule<F> module_permutation(const F& K, const FinGroup& G) {
  GModule<F> M;
  M.G = &G;
  M.K = K;
  M.d = G.degree();
  M.rho.resize(G.order());
  for (gid a = 0; a < G.order(); ++a) {
    Matrix<F> P = mat_zeros(K, M.d, M.d);
    for (std::size_t i = 0; i < M.d; ++i) P.at(G.perm(a)[i], i) = K.one();
    M.rho[a] = std::move(P);
  }
  return M;
}

// Regular module kG with basis {e_g}, g(e_x) = e_{gx}.
template <class F>
GModule<F> module_regular(const F& K, const FinGroup& G) {
  GModule<F> M;
  M.G = &G;
  M.K = K;
  M.d = G.order();
  M.rho.resize(G.order());
  for (gid a = 0; a < G.order(); ++a) {
    Matrix<F> P = mat_zeros(K, M.d, M.d);
    for (gid x = 0; x < G.order(); ++x) P.at(G.op(a, x), x) = K.one();
    M.rho[a] = std::move(P);
  }
  return M;
}

// Standard (degree-1 less) reflection module of a permutation group, in the
// basis b_i = x_i - x_{i+1} of the sum-zero subspace of the permutation
// module.  For the symmetric group this is the (n-1)-dimensional reflection
// representation.
template <class F>
GModule<F> module_reflection(const F& K, const FinGroup& G) {
  const std::size_t m = G.degree();
  if (m < 2) throw ConfigError("reflection module: degree >= 2 required");
  GModule<F> M;
  M.G = &G;
  M.K = K;
  M.d = m - 1;
  // x_a - x_b (a<b) has coordinates sum_{i=a..b-1} b_i; in general the
  // coordinate vector of sum_i c_i x_i with sum c_i = 0 in the b-basis is
  // partial sums: coord_j = sum_{i<=j} c_i.
  M.rho.resize(G.order());
  for (gid g = 0; g < G.order(); ++g) {
    Matrix<F> R = mat_zeros(K, m - 1, m - 1);
    for (std::size_t j = 0; j + 1 < m; ++j) {
      // image of b_j = x_j - x_{j+1} is x_{p(j)} - x_{p(j+1)}
      std::vector<typename F::Elem> c(m, K.zero());
      c[G.perm(g)[j]] = K.one();
      c[G.perm(g)[j + 1]] = K.neg(K.one());
      typename F::Elem run = K.zero();
      for (std::size_t i = 0; i + 1 < m; ++i) {
        run = K.add(run, c[i]);
        R.at(i, j) = run;
      }
    }
    M.rho[g] = std::move(R);
  }
  return M;
}

template <class F>
GModule<F> module_dual(const GModule<F>& M) {
  GModule<F> D = M;
  for (gid g = 0; g < M.G->order(); ++g)
    D.rho[g] = mat_transpose(M.K, M.of(M.G->inv(g)));
  return D;
}

template <class F>
GModule<F> module_tensor(const GModule<F>& A, const GModule<F>& B) {
  GModule<F> T;
  T.G = A.G;
  T.K = A.K;
  T.d = A.d * B.d;
  T.rho.resize(A.G->order());
  for (gid g = 0; g < A.G->order(); ++g) T.rho[g] = mat_kron(A.K, A.of(g), B.of(g));
  return T;
}

// n-fold tensor power matrix of a single group element.
template <class F>
Matrix<F> module_tensor_power_of(const GModule<F>& M, gid g, std::size_t n) {
  Matrix<F> R = mat_identity(M.K, 1);
  for (std::size_t i = 0; i < n; ++i) R = mat_kron(M.K, R, M.of(g));
  return R;
}

// ----------------------------------------------------------------- checks --

// Full verification: rho(e) = id and rho(a)rho(b) = rho(ab) for all pairs.
template <class F>
CheckReport<F> check_module(const GModule<F>& M) {
  const F& K = M.K;
  if (!mat_eq(K, M.of(0), mat_identity(K, M.d)))
    return {false, "rho(identity) is not the identity matrix"};
  for (gid a = 0; a < M.G->order(); ++a)
    for (gid b = 0; b < M.G->order(); ++b)
      if (!mat_eq(K, mat_mul(K, M.of(a), M.of(b)), M.of(M.G->op(a, b))))
        return {false, "rho(" + M.G->label(a) + ")rho(" + M.G->label(b) +
                           ") != rho(product)"};
  return {true, ""};
}

// Irreducibility over the base field via the commutant: the module is
// absolutely irreducible iff the solution space of [X, rho(g)] = 0 for all g
// is 1-dimensional.  Over prime fields this tests the commutant dimension,
// which equals 1 exactly for absolutely irreducible modules.
template <class F>
bool module_commutant_is_trivial(const GModule<F>& M) {
  const F& K = M.K;
  const std::size_t d = M.d;
  // unknowns X_{ij}; equations rho(g) X - X rho(g) = 0, entries (a,b)
  Matrix<F> sys = mat_zeros(K, 0, d * d);
  for (gid g = 1; g < M.G->order(); ++g) {
    Matrix<F> rows = mat_zeros(K, d * d, d * d);
    const Matrix<F>& R = M.of(g);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t k = 0; k < d; ++k) {
          // (R X)_{ab} = sum_k R_{ak} X_{kb};  (X R)_{ab} = sum_k X_{ak} R_{kb}
          rows.at(a * d + b, k * d + b) =
              K.add(rows.at(a * d + b, k * d + b), R.at(a, k));
          rows.at(a * d + b, a * d + k) =
              K.sub(rows.at(a * d + b, a * d + k), R.at(k, b));
        }
    sys = mat_stack_rows(K, sys, rows);
  }
  if (M.G->order() == 1) return d == 1;
  return kernel_basis(K, sys).cols == 1;
}

}  // namespace bd
