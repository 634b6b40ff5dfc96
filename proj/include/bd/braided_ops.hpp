#pragma once
// Braided and quasibraided integer operators.
//
// For a braiding Psi on V (x) V:
//   [n]_Psi   = id + Psi_{n-1,n} + Psi_{n-1,n}Psi_{n-2,n-1} + ...
//               + Psi_{n-1,n}...Psi_{1,2}                    on V^{(x)n}
//   [n]!_Psi  = ([n-1]!_Psi (x) id) o [n]_Psi,   [1]!_Psi = id
// and the Woronowicz symmetrizer sum_{sigma in S_n} Psi_sigma (reduced words
// chosen by insertion sort) equals [n]!_Psi — kept as an independent oracle.
//
// For a quasicoaction delta(v) = sum_h h (x) L_h(v) of kG on V:
//   qb integer   V^{(x)n} -> V^{(x)n-1} (x) kG (x) V
//     b  |->  sum_i sum_h  v_1..v_{i-1} (x) h(v_{i+1}..v_n) (x) h (x) L_h(v_i)
//   qb factorial F_n = (F_{n-1} (x) id_{kG (x) V}) o qb integer, F_1 = delta
// and on the dual side (right-handed)
//   qb integer^r V*^{(x)n} -> V* (x) kG (x) V*^{(x)n-1}
//     phi |->  sum_i sum_h  (f_i o L_h) (x) h (x) (f_1..f_{i-1}) <| h (x) f_{i+1}..f_n
//   F^r_n = (id_{V* (x) kG} (x) F^r_{n-1}) o qb integer^r, F^r_1 = delta_r.
//
// Kernels of the factorials are computed degree by degree without
// materializing the factorial: K_n = ker((T_{K_{n-1}} (x) id) o qb integer_n)
// where T_S is the complement test of S (ker T_S = S); this is exact because
// a tensor lies in ker F_n iff the qb integer maps it into K_{n-1} (x) kG (x) V.

#include <cstdint>
#include <vector>

#include "bd/qyd.hpp"

namespace bd {

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::size_t word_index(const std::vector<std::size_t>& w, std::size_t d) {
  std::size_t idx = 0;
  for (std::size_t x : w) idx = idx * d + x;
  return idx;
}

inline std::vector<std::size_t> index_word(std::size_t idx, std::size_t n, std::size_t d) {
  std::vector<std::size_t> w(n);
  for (std::size_t i = n; i-- > 0;) {
    w[i] = idx % d;
    idx /= d;
  }
  return w;
}

// A (x) id placed at legs (i, i+1) of V^{(x)n}; i is 1-based.
template <class F>
Matrix<F> leg2_op(const F& K, const Matrix<F>& A, std::size_t d, std::size_t i,
                  std::size_t n) {
  return mat_kron(K, mat_identity(K, ipow(d, i - 1)),
                  mat_kron(K, A, mat_identity(K, ipow(d, n - i - 1))));
}

// ---------------------------------------------------------------- braided --

template <class F>
Matrix<F> braided_integer(const F& K, const Matrix<F>& Psi, std::size_t d,
                          std::size_t n) {
  Matrix<F> S = mat_identity(K, ipow(d, n));
  Matrix<F> P = mat_identity(K, ipow(d, n));
  for (std::size_t k = 1; k < n; ++k) {
    P = mat_mul(K, P, leg2_op(K, Psi, d, n - k, n));
    S = mat_add(K, S, P);
  }
  return S;
}

template <class F>
Matrix<F> braided_factorial(const F& K, const Matrix<F>& Psi, std::size_t d,
                            std::size_t n) {
  Matrix<F> A = mat_identity(K, d);
  for (std::size_t m = 2; m <= n; ++m)
    A = mat_mul(K, mat_kron(K, A, mat_identity(K, d)),
                braided_integer(K, Psi, d, m));
  return A;
}

// Reduced word for sigma (one-line, 0-based) by insertion sort: recording the
// adjacent swaps (1-based positions) that sort sigma gives sigma = s_{j_k}...s_{j_1},
// so Psi_sigma = leg(j_k)...leg(j_1) applied in recorded order.
inline std::vector<std::size_t> reduced_word_insertion(std::vector<std::size_t> p) {
  std::vector<std::size_t> word;
  for (std::size_t i = 1; i < p.size(); ++i)
    for (std::size_t j = i; j > 0 && p[j - 1] > p[j]; --j) {
      std::swap(p[j - 1], p[j]);
      word.push_back(j);  // 1-based leg position
    }
  return word;
}

template <class F>
Matrix<F> braided_perm_op(const F& K, const Matrix<F>& Psi, std::size_t d,
                          std::size_t n, const std::vector<std::size_t>& sigma) {
  Matrix<F> M = mat_identity(K, ipow(d, n));
  for (std::size_t j : reduced_word_insertion(sigma))
    M = mat_mul(K, leg2_op(K, Psi, d, j, n), M);
  return M;
}

// Independent oracle: the full symmetrizer sum over S_n.
template <class F>
Matrix<F> woronowicz_symmetrizer(const F& K, const Matrix<F>& Psi, std::size_t d,
                                 std::size_t n, std::size_t cap = 5) {
  if (n > cap)
    throw ConfigError("woronowicz oracle: degree " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  Matrix<F> S = mat_zeros(K, ipow(d, n), ipow(d, n));
  do {
    S = mat_add(K, S, braided_perm_op(K, Psi, d, n, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return S;
}

// ------------------------------------------------------------ quasibraided --

// Column permutation moving leg i (1-based) of an n-fold word to the end.
inline std::vector<std::size_t> movelast_perm(std::size_t d, std::size_t n,
                                              std::size_t i) {
  const std::size_t D = ipow(d, n);
  std::vector<std::size_t> pm(D);
  for (std::size_t c = 0; c < D; ++c) {
    std::vector<std::size_t> w = index_word(c, n, d);
    std::vector<std::size_t> r;
    r.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
      if (k != i - 1) r.push_back(w[k]);
    r.push_back(w[i - 1]);
    pm[c] = word_index(r, d);
  }
  return pm;
}

// Column permutation moving leg i (1-based) to the front.
inline std::vector<std::size_t> movefront_perm(std::size_t d, std::size_t n,
                                               std::size_t i) {
  const std::size_t D = ipow(d, n);
  std::vector<std::size_t> pm(D);
  for (std::size_t c = 0; c < D; ++c) {
    std::vector<std::size_t> w = index_word(c, n, d);
    std::vector<std::size_t> r;
    r.reserve(n);
    r.push_back(w[i - 1]);
    for (std::size_t k = 0; k < n; ++k)
      if (k != i - 1) r.push_back(w[k]);
    pm[c] = word_index(r, d);
  }
  return pm;
}

// V^{(x)n} -> V^{(x)(n-1)} (x) kG (x) V.
template <class F>
Matrix<F> qb_integer(const QYD<F>& q, std::size_t n) {
  const F& K = q.M.K;
  const std::size_t d = q.d(), ng = q.G().order();
  const std::size_t R = ipow(d, n - 1) * ng * d, C = ipow(d, n);
  Matrix<F> M = mat_zeros(K, R, C);
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> pm = movelast_perm(d, n, i);
    for (const auto& [h, Lh] : q.L) {
      Matrix<F> uh = mat_zeros(K, ng, 1);
      uh.at(h, 0) = K.one();
      Matrix<F> A = mat_kron(
          K, mat_identity(K, ipow(d, i - 1)),
          mat_kron(K, module_tensor_power_of(q.M, h, n - i), mat_kron(K, uh, Lh)));
      M = mat_add(K, M, mat_cols_permuted(K, A, pm));
    }
  }
  return M;
}

// Full factorial V^{(x)n} -> (kG (x) V)^{(x)n}; exponential rows, use only at
// small degree (cross-checks); kernels come from qb_kernel_chain instead.
template <class F>
Matrix<F> qb_factorial(const QYD<F>& q, std::size_t n) {
  const F& K = q.M.K;
  const std::size_t hv = q.G().order() * q.d();
  Matrix<F> Fm = delta_matrix(q);
  for (std::size_t m = 2; m <= n; ++m)
    Fm = mat_mul(K, mat_kron(K, Fm, mat_identity(K, hv)), qb_integer(q, m));
  return Fm;
}

// V*^{(x)n} -> V* (x) kG (x) V*^{(x)(n-1)}.  The right action on covectors is
// f <| h = f o rho(h), i.e. transpose(rho(h)) on coordinates, and the first
// leg carries f_i o L_h = transpose(L_h) f_i.
template <class F>
Matrix<F> qb_integer_right(const QYD<F>& q, std::size_t n) {
  const F& K = q.M.K;
  const std::size_t d = q.d(), ng = q.G().order();
  const std::size_t R = d * ng * ipow(d, n - 1), C = ipow(d, n);
  Matrix<F> M = mat_zeros(K, R, C);
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> pm = movefront_perm(d, n, i);
    for (const auto& [h, Lh] : q.L) {
      Matrix<F> uh = mat_zeros(K, ng, 1);
      uh.at(h, 0) = K.one();
      Matrix<F> rt = mat_transpose(K, q.M.of(h));
      Matrix<F> mid = mat_identity(K, 1);
      for (std::size_t k = 0; k + 1 < i; ++k) mid = mat_kron(K, mid, rt);
      Matrix<F> A = mat_kron(
          K, mat_transpose(K, Lh),
          mat_kron(K, uh, mat_kron(K, mid, mat_identity(K, ipow(d, n - i)))));
      M = mat_add(K, M, mat_cols_permuted(K, A, pm));
    }
  }
  return M;
}

template <class F>
Matrix<F> qb_factorial_right(const QYD<F>& q, std::size_t n) {
  const F& K = q.M.K;
  const std::size_t hv = q.d() * q.G().order();
  Matrix<F> Fm = delta_right_matrix(q);
  for (std::size_t m = 2; m <= n; ++m)
    Fm = mat_mul(K, mat_kron(K, mat_identity(K, hv), Fm), qb_integer_right(q, m));
  return Fm;
}

// Kernels of the qb factorials for degrees 0..N (degree 0 is the zero
// subspace of the 1-dimensional V^{(x)0}).
template <class F>
std::vector<Subspace<F>> qb_kernel_chain(const QYD<F>& q, std::size_t N) {
  const F& K = q.M.K;
  const std::size_t hv = q.G().order() * q.d();
  std::vector<Subspace<F>> out;
  out.push_back(subspace_zero(K, 1));
  for (std::size_t n = 1; n <= N; ++n) {
    Matrix<F> T = complement_test(K, out[n - 1]);
    Matrix<F> B = mat_mul(K, mat_kron(K, T, mat_identity(K, hv)), qb_integer(q, n));
    out.push_back(subspace_from_kernel(K, B));
  }
  return out;
}

template <class F>
std::vector<Subspace<F>> qb_kernel_chain_right(const QYD<F>& q, std::size_t N) {
  const F& K = q.M.K;
  const std::size_t hv = q.d() * q.G().order();
  std::vector<Subspace<F>> out;
  out.push_back(subspace_zero(K, 1));
  for (std::size_t n = 1; n <= N; ++n) {
    Matrix<F> T = complement_test(K, out[n - 1]);
    Matrix<F> B =
        mat_mul(K, mat_kron(K, mat_identity(K, hv), T), qb_integer_right(q, n));
    out.push_back(subspace_from_kernel(K, B));
  }
  return out;
}

// eps (x) id : kG (x) V -> V as a matrix (counit on the group leg).
template <class F>
Matrix<F> counit_leg(const F& K, std::size_t ng, std::size_t d) {
  Matrix<F> P = mat_zeros(K, d, ng * d);
  for (std::size_t h = 0; h < ng; ++h)
    for (std::size_t v = 0; v < d; ++v) P.at(v, h * d + v) = K.one();
  return P;
}

// Multiplication collapse m_H : (kG (x) V)^{(x)n} -> kG (x) V^{(x)n},
// h_1 (x) v_1 (x) ... (x) h_n (x) v_n  |->  h_1...h_n (x) v_1 (x) ... (x) v_n.
template <class F>
Matrix<F> mh_collapse(const F& K, const FinGroup& G, std::size_t d, std::size_t n) {
  const std::size_t ng = G.order(), hv = ng * d;
  const std::size_t C = ipow(hv, n), R = ng * ipow(d, n);
  Matrix<F> M = mat_zeros(K, R, C);
  for (std::size_t c = 0; c < C; ++c) {
    std::size_t rem = c;
    std::vector<std::size_t> hs(n), vs(n);
    for (std::size_t i = n; i-- > 0;) {
      std::size_t pair = rem % hv;
      rem /= hv;
      hs[i] = pair / d;
      vs[i] = pair % d;
    }
    gid g = 0;
    for (std::size_t i = 0; i < n; ++i) g = G.op(g, static_cast<gid>(hs[i]));
    M.at(g * ipow(d, n) + word_index(vs, d), c) = K.one();
  }
  return M;
}

// ------------------------------------------------- compatibility of braidings --

template <class F>
bool braid_eq_check(const F& K, const Matrix<F>& Psi, std::size_t d) {
  Matrix<F> a = leg2_op(K, Psi, d, 1, 3), b = leg2_op(K, Psi, d, 2, 3);
  return mat_eq(K, mat_mul(K, a, mat_mul(K, b, a)), mat_mul(K, b, mat_mul(K, a, b)));
}

// (Psi' (x) id)(id (x) Psi)(Psi (x) id) == (id (x) Psi)(Psi (x) id)(id (x) Psi').
template <class F>
bool compat_check(const F& K, const Matrix<F>& Psi, const Matrix<F>& PsiP,
                  std::size_t d) {
  Matrix<F> a1 = leg2_op(K, Psi, d, 1, 3), a2 = leg2_op(K, Psi, d, 2, 3);
  Matrix<F> b1 = leg2_op(K, PsiP, d, 1, 3), b2 = leg2_op(K, PsiP, d, 2, 3);
  return mat_eq(K, mat_mul(K, b1, mat_mul(K, a2, a1)),
                mat_mul(K, a2, mat_mul(K, a1, b2)));
}

// Semibraiding of a compatible family: Psi_Pi^{1,n} on V^{(x)(n+1)} is
// sum_{Psi in Pi} Psi_{n,n+1}...Psi_{1,2}, and Psi_Pi^{m,n} is the product of
// shifted copies (Psi_Pi^{1,n})_{1..n+1} ... (Psi_Pi^{1,n})_{m..m+n}.
template <class F>
Matrix<F> semibraiding_1n(const F& K, const std::vector<Matrix<F>>& Pis,
                          std::size_t d, std::size_t n) {
  const std::size_t D = ipow(d, n + 1);
  Matrix<F> S = mat_zeros(K, D, D);
  for (const auto& Psi : Pis) {
    Matrix<F> P = mat_identity(K, D);
    for (std::size_t j = 1; j <= n; ++j) P = mat_mul(K, leg2_op(K, Psi, d, j, n + 1), P);
    S = mat_add(K, S, P);
  }
  return S;
}

template <class F>
Matrix<F> semibraiding_mn(const F& K, const std::vector<Matrix<F>>& Pis,
                          std::size_t d, std::size_t m, std::size_t n) {
  const std::size_t total = m + n;
  Matrix<F> base = semibraiding_1n(K, Pis, d, n);
  Matrix<F> M = mat_identity(K, ipow(d, total));
  for (std::size_t i = 1; i <= m; ++i) {
    Matrix<F> padded = mat_kron(
        K, mat_identity(K, ipow(d, i - 1)),
        mat_kron(K, base, mat_identity(K, ipow(d, total - (i - 1) - (n + 1)))));
    M = mat_mul(K, M, padded);
  }
  return M;
}

// ------------------------------------------------------ deformed factorial --

// [n]!_{Psi,tau} = ([2]_Psi + u_2 [2]_tau) ... ([n]_Psi + u_n [n]_tau) with
// each factor acting on the first k legs; u has entries u_2..u_n.
template <class F>
Matrix<F> deformed_factorial(const F& K, const Matrix<F>& Psi, std::size_t d,
                             std::size_t n,
                             const std::vector<typename F::Elem>& u) {
  if (u.size() + 1 != n)
    throw ConfigError("deformed factorial: need parameters u_2..u_n");
  Matrix<F> T = tau_matrix(K, d);
  Matrix<F> A = mat_identity(K, ipow(d, n));
  for (std::size_t k = n; k >= 2; --k) {
    Matrix<F> fac = mat_add(K, braided_integer(K, Psi, d, k),
                            mat_scale(K, u[k - 2], braided_integer(K, T, d, k)));
    Matrix<F> padded = mat_kron(K, fac, mat_identity(K, ipow(d, n - k)));
    A = mat_mul(K, padded, A);
  }
  return A;
}

// ---------------------------------------------------------- genericity ----

struct GenericPolicy {
  std::uint64_t seed = 0;
  int trials = 3;  // >= 2 required, >= 3 used by default
};

struct DeformedKernels {
  std::uint64_t prime = 0;              // sampling prime field
  std::vector<std::size_t> dims;        // kernel dim at degrees 0..N
  std::vector<Subspace<FpField>> kernels;  // RREF bases over GF(prime)
};

inline Matrix<FpField> mat_mod_p(const FpField& Kp, const Matrix<RatField>& A) {
  Matrix<FpField> B = mat_zeros(Kp, A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) {
    const mpq_class& q = A.a[i];
    mpz_class num = q.get_num() % mpz_class(Kp.p);
    mpz_class den = q.get_den() % mpz_class(Kp.p);
    if (den == 0)
      throw ComputeError("specialization: denominator vanishes mod sampling prime");
    std::uint64_t nu = mpz_class(num < 0 ? num + mpz_class(Kp.p) : num).get_ui();
    B.a[i] = Kp.div(nu, mpz_class(den).get_ui());
  }
  return B;
}

namespace detail {
inline DeformedKernels generic_deformed_kernels_impl(const FpField& Kp,
                                                     const Matrix<FpField>& Psi,
                                                     std::size_t d, std::size_t N,
                                                     const GenericPolicy& pol,
                                                     std::mt19937_64& rng,
                                                     std::uint64_t prime) {
  const int trials = std::max(pol.trials, 3);
  DeformedKernels out;
  out.prime = prime;
  std::vector<std::vector<Subspace<FpField>>> per_trial(trials);
  for (int t = 0; t < trials; ++t) {
    std::vector<std::uint64_t> u(N >= 2 ? N - 1 : 0);
    for (auto& x : u) x = Kp.sample(rng);
    per_trial[t].push_back(subspace_zero(Kp, 1));       // degree 0
    per_trial[t].push_back(subspace_zero(Kp, d));       // degree 1: [1]! = id
    for (std::size_t n = 2; n <= N; ++n) {
      std::vector<std::uint64_t> un(u.begin(), u.begin() + (n - 1));
      per_trial[t].push_back(
          subspace_from_kernel(Kp, deformed_factorial(Kp, Psi, d, n, un)));
    }
  }
  for (int t = 1; t < trials; ++t)
    for (std::size_t n = 0; n <= N; ++n)
      if (!subspace_eq(Kp, per_trial[t][n], per_trial[0][n]))
        throw ComputeError(
            "genericity trials disagree at degree " + std::to_string(n) +
            "; parameters are not in generic position for this sampling");
  out.kernels = per_trial[0];
  for (std::size_t n = 0; n <= N; ++n) out.dims.push_back(out.kernels[n].dim());
  return out;
}
}  // namespace detail

// Base field Q: reduce Psi modulo a random prime >= 2^31 and sample the
// deformation parameters there; >=3 agreeing trials certify the generic
// kernel (disagreement is surfaced as ComputeError, never patched).
inline DeformedKernels generic_deformed_kernels(const RatField&,
                                                const Matrix<RatField>& Psi,
                                                std::size_t d, std::size_t N,
                                                const GenericPolicy& pol) {
  if (pol.trials < 2)
    throw ConfigError("genericity policy: trials >= 2 required");
  std::mt19937_64 rng(pol.seed);
  std::uint64_t prime = random_prime_at_least(1ull << 31, rng);
  FpField Kp(prime);
  return detail::generic_deformed_kernels_impl(Kp, mat_mod_p(Kp, Psi), d, N, pol,
                                               rng, prime);
}

inline DeformedKernels generic_deformed_kernels(const FpField& K,
                                                const Matrix<FpField>& Psi,
                                                std::size_t d, std::size_t N,
                                                const GenericPolicy& pol) {
  if (pol.trials < 2)
    throw ConfigError("genericity policy: trials >= 2 required");
  if (K.p < (1ull << 31))
    throw ConfigError(
        "genericity policy: base prime field too small to sample generic "
        "parameters (need p >= 2^31); run over Q or a large prime field");
  std::mt19937_64 rng(pol.seed);
  return detail::generic_deformed_kernels_impl(K, Psi, d, N, pol, rng, K.p);
}

}  // namespace bd
