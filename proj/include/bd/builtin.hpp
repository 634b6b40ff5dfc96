#pragma once
// Named example data: small bundles of (group, module, structure) used by the
// CLI and the test suite.

#include <memory>
#include <optional>
#include <string>

#include "bd/nichols.hpp"

namespace bd {

template <class F>
struct ExampleBundle {
  std::shared_ptr<FinGroup> G;
  GModule<F> M;
  QYD<F> q;
  std::optional<YDModule<F>> yd;
};

// Two-dimensional module over C2 = {e, s} with s acting by -1 and
// L_e = E_11, L_s = E_12; the right half collapses to one variable while the
// left half stays free.
template <class F>
ExampleBundle<F> pathological_example(const F& K) {
  ExampleBundle<F> b;
  b.G = std::make_shared<FinGroup>(FinGroup::cyclic(2));
  b.M.G = b.G.get();
  b.M.K = K;
  b.M.d = 2;
  b.M.rho.push_back(mat_identity(K, 2));
  b.M.rho.push_back(mat_scale(K, K.neg(K.one()), mat_identity(K, 2)));
  b.q.M = b.M;
  Matrix<F> Le = mat_zeros(K, 2, 2), Ls = mat_zeros(K, 2, 2);
  Le.at(0, 0) = K.one();
  Ls.at(0, 1) = K.one();
  b.q.L.emplace(0, std::move(Le));
  b.q.L.emplace(1, std::move(Ls));
  return b;
}

// Sign module of C2 in the given dimension; Nichols quotient is the exterior
// algebra, the bosonisation has dimension 2^{dim+1}.
template <class F>
ExampleBundle<F> exterior_example(const F& K, std::size_t dim = 2) {
  ExampleBundle<F> b;
  b.G = std::make_shared<FinGroup>(FinGroup::cyclic(2));
  YDModule<F> yd = yd_sign_module(K, *b.G, dim);
  yd.M.G = b.G.get();
  b.M = yd.M;
  b.q = qyd_from_yd(yd);
  b.yd = std::move(yd);
  return b;
}

// Transposition module of S_m (sign-twisted conjugation).
template <class F>
ExampleBundle<F> transposition_example(const F& K, std::size_t m,
                                       bool sign_twist = true) {
  ExampleBundle<F> b;
  b.G = std::make_shared<FinGroup>(FinGroup::symmetric(m));
  YDModule<F> yd = yd_transpositions(K, *b.G, sign_twist);
  yd.M.G = b.G.get();
  b.M = yd.M;
  b.q = qyd_from_yd(yd);
  b.yd = std::move(yd);
  return b;
}

// One-dimensional module over C_m graded at the generator, which acts by the
// scalar qv (requires qv^m = 1).
template <class F>
ExampleBundle<F> qline_example(const F& K, std::size_t m,
                               const typename F::Elem& qv) {
  ExampleBundle<F> b;
  b.G = std::make_shared<FinGroup>(FinGroup::cyclic(m));
  auto pw = K.one();
  for (std::size_t i = 0; i < m; ++i) pw = K.mul(pw, qv);
  if (!K.eq(pw, K.one()))
    throw ConfigError("qline: the scalar is not an m-th root of unity");
  Matrix<F> gen = mat_zeros(K, 1, 1);
  gen.at(0, 0) = qv;
  b.M = module_from_generator_matrices(K, *b.G, {gen});
  b.M.G = b.G.get();
  YDModule<F> yd;
  yd.M = b.M;
  for (gid g = 0; g < b.G->order(); ++g) {
    Matrix<F> P = mat_zeros(K, 1, 1);
    if (g == 1 && m > 1) P.at(0, 0) = K.one();
    if (m == 1 && g == 0) P.at(0, 0) = K.one();
    yd.P.emplace(g, std::move(P));
  }
  b.q = qyd_from_yd(yd);
  b.yd = std::move(yd);
  return b;
}

}  // namespace bd
