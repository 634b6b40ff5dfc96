#pragma once
// Nichols-Woronowicz quotients: graded dimensions from braided factorials,
// graded quotient algebras on canonical complement-word bases, bosonisation
// (smash product) with the comultiplication audit on defining relations, the
// transposition module lane, and the exterior-algebra example family.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bd/double_engine.hpp"

namespace bd {

// Graded dimensions dim B(V, Psi)_n = rank [n]!_Psi for n = 0..N.
template <class F>
std::vector<std::size_t> braided_hilbert(const F& K, const Matrix<F>& Psi,
                                         std::size_t d, std::size_t N) {
  std::vector<std::size_t> dims{1};
  for (std::size_t n = 1; n <= N; ++n)
    dims.push_back(mat_rank(K, braided_factorial(K, Psi, d, n)));
  return dims;
}

// Same dimensions from the Woronowicz symmetrizer sum_{sigma} Psi_sigma.
template <class F>
std::vector<std::size_t> woronowicz_hilbert(const F& K, const Matrix<F>& Psi,
                                            std::size_t d, std::size_t N,
                                            std::size_t max_n = 5) {
  std::vector<std::size_t> dims{1};
  for (std::size_t n = 1; n <= N; ++n)
    dims.push_back(mat_rank(K, woronowicz_symmetrizer(K, Psi, d, n, max_n)));
  return dims;
}

// ------------------------------------------------- graded quotient algebra --

// T(V) / (degreewise relation subspaces), with the canonical complement
// words as basis in each degree.  Valid products only up to the truncation.
template <class F>
struct GradedQuotient {
  const F* K = nullptr;
  std::size_t d = 0, N = 0;
  std::vector<Subspace<F>> rel;                   // degrees 0..N
  std::vector<std::vector<std::size_t>> basis;    // complement word indices
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& b : basis) out.push_back(b.size());
    return out;
  }
};

template <class F>
GradedQuotient<F> graded_quotient(const F& K, std::size_t d,
                                  std::vector<Subspace<F>> rel) {
  GradedQuotient<F> gq;
  gq.K = &K;
  gq.d = d;
  gq.N = rel.size() - 1;
  gq.rel = std::move(rel);
  for (const auto& r : gq.rel) gq.basis.push_back(subspace_complement_coords(r));
  return gq;
}

template <class F>
GradedQuotient<F> nichols_quotient(const QYD<F>& q, std::size_t N) {
  return graded_quotient(q.M.K, q.d(), qb_kernel_chain(q, N));
}

// True when some slice <= N is zero: the relation chains grow as two-sided
// ideals, so every higher degree vanishes too and out-of-truncation products
// are exactly zero.
template <class F>
bool gq_vanishes_above(const GradedQuotient<F>& gq) {
  for (std::size_t n = 0; n <= gq.N; ++n)
    if (gq.basis[n].empty()) return true;
  return false;
}

// Multiply basis words: (degree p, position i) * (degree q, position j);
// returns coordinates over the degree p+q complement basis.
template <class F>
std::map<std::size_t, typename F::Elem> gq_mul(const GradedQuotient<F>& gq,
                                               std::size_t p, std::size_t i,
                                               std::size_t q, std::size_t j) {
  const F& K = *gq.K;
  if (p + q > gq.N) {
    if (gq_vanishes_above(gq)) return {};
    throw ComputeError("graded quotient: product exceeds truncation");
  }
  const std::size_t idx = gq.basis[p][i] * ipow(gq.d, q) + gq.basis[q][j];
  Vec<F> red = subspace_reduce(K, gq.rel[p + q], vec_unit(K, ipow(gq.d, p + q), idx));
  std::map<std::size_t, typename F::Elem> out;
  const auto& bas = gq.basis[p + q];
  for (std::size_t t = 0; t < bas.size(); ++t)
    if (!K.is_zero(red[bas[t]])) out.emplace(t, red[bas[t]]);
  return out;
}

// ------------------------------------------------------------ bosonisation --

// Smash product B # kG of a graded quotient with braiding induced by a YD
// structure.  Basis: (degree n, complement position, group element).
template <class F>
struct SmashAlgebra {
  GradedQuotient<F> gq;
  YDModule<F> yd;
  std::size_t total_dim = 0;
  std::vector<std::size_t> offsets;  // per degree

  std::size_t index(std::size_t n, std::size_t pos, gid g) const {
    return offsets[n] + pos * yd.M.G->order() + g;
  }
};

template <class F>
using SmashElem = std::map<std::size_t, typename F::Elem>;  // index -> coeff

template <class F>
SmashAlgebra<F> smash_algebra(GradedQuotient<F> gq, YDModule<F> yd) {
  SmashAlgebra<F> A{std::move(gq), std::move(yd)};
  const std::size_t ng = A.yd.M.G->order();
  std::size_t tot = 0;
  for (std::size_t n = 0; n <= A.gq.N; ++n) {
    A.offsets.push_back(tot);
    tot += A.gq.basis[n].size() * ng;
  }
  A.total_dim = tot;
  return A;
}

template <class F>
void smash_add(const F& K, SmashElem<F>& x, std::size_t idx,
               const typename F::Elem& c) {
  if (K.is_zero(c)) return;
  auto it = x.find(idx);
  if (it == x.end()) {
    x.emplace(idx, c);
  } else {
    it->second = K.add(it->second, c);
    if (K.is_zero(it->second)) x.erase(it);
  }
}

// (w1, g1)(w2, g2) = (w1 . g1(w2), g1 g2) reduced in the quotient.
template <class F>
SmashElem<F> smash_mul_basis(const SmashAlgebra<F>& A, std::size_t p,
                             std::size_t i, gid g1, std::size_t q, std::size_t j,
                             gid g2) {
  const F& K = *A.gq.K;
  if (p + q > A.gq.N) {
    if (gq_vanishes_above(A.gq)) return {};
    throw ComputeError("smash product exceeds truncation");
  }
  const std::size_t d = A.gq.d;
  Matrix<F> Rg = module_tensor_power_of(A.yd.M, g1, q);
  Vec<F> moved = mat_col(K, Rg, A.gq.basis[q][j]);
  SmashElem<F> out;
  const gid g = A.yd.M.G->op(g1, g2);
  Vec<F> acc = vec_zeros(K, ipow(d, p + q));
  for (std::size_t t = 0; t < moved.size(); ++t) {
    if (K.is_zero(moved[t])) continue;
    acc[A.gq.basis[p][i] * ipow(d, q) + t] =
        K.add(acc[A.gq.basis[p][i] * ipow(d, q) + t], moved[t]);
  }
  Vec<F> red = subspace_reduce(K, A.gq.rel[p + q], acc);
  const auto& bas = A.gq.basis[p + q];
  for (std::size_t t = 0; t < bas.size(); ++t)
    if (!K.is_zero(red[bas[t]]))
      smash_add(K, out, A.index(p + q, t, g), red[bas[t]]);
  return out;
}

template <class F>
SmashElem<F> smash_mul(const SmashAlgebra<F>& A, const SmashElem<F>& x,
                       const SmashElem<F>& y) {
  const F& K = *A.gq.K;
  const std::size_t ng = A.yd.M.G->order();
  SmashElem<F> out;
  auto locate = [&](std::size_t idx) {
    std::size_t n = 0;
    while (n + 1 < A.offsets.size() && A.offsets[n + 1] <= idx) ++n;
    const std::size_t off = idx - A.offsets[n];
    return std::tuple<std::size_t, std::size_t, gid>{n, off / ng,
                                                     static_cast<gid>(off % ng)};
  };
  for (const auto& [ix, cx] : x)
    for (const auto& [iy, cy] : y) {
      auto [p, i, g1] = locate(ix);
      auto [q, j, g2] = locate(iy);
      SmashElem<F> prod = smash_mul_basis(A, p, i, g1, q, j, g2);
      for (const auto& [iz, cz] : prod)
        smash_add(K, out, iz, K.mul(K.mul(cx, cy), cz));
    }
  return out;
}

template <class F>
bool smash_eq(const F& K, const SmashElem<F>& a, const SmashElem<F>& b) {
  if (a.size() != b.size()) return false;
  auto it = b.begin();
  for (const auto& [i, c] : a) {
    if (i != it->first || !K.eq(c, it->second)) return false;
    ++it;
  }
  return true;
}

// Central up to the truncation boundary: checked against all basis elements
// whose product with x stays within degree <= N on both sides.
template <class F>
bool smash_is_central(const SmashAlgebra<F>& A, const SmashElem<F>& x) {
  const F& K = *A.gq.K;
  std::size_t xdeg = 0;
  auto locate_deg = [&](std::size_t idx) {
    std::size_t n = 0;
    while (n + 1 < A.offsets.size() && A.offsets[n + 1] <= idx) ++n;
    return n;
  };
  for (const auto& [i, c] : x) xdeg = std::max(xdeg, locate_deg(i));
  const std::size_t ng = A.yd.M.G->order();
  for (std::size_t n = 0; n + xdeg <= A.gq.N; ++n)
    for (std::size_t pos = 0; pos < A.gq.basis[n].size(); ++pos)
      for (gid g = 0; g < ng; ++g) {
        SmashElem<F> b{{A.index(n, pos, g), K.one()}};
        if (!smash_eq(K, smash_mul(A, x, b), smash_mul(A, b, x))) return false;
      }
  return true;
}

// Comultiplication audit (bosonisation): Delta(v) = v (x) 1 + g_v (x) v on
// degree-one generators, extended multiplicatively; well-definedness requires
// Delta(r) = 0 in A (x) A for every defining relation r.  Degree-one
// generators must be homogeneous: v_i in V_{grade[i]}.
template <class F>
CheckReport<F> smash_delta_on_relations(const SmashAlgebra<F>& A,
                                        const std::vector<gid>& grade,
                                        const Subspace<F>& rel2) {
  const F& K = *A.gq.K;
  const std::size_t d = A.gq.d;
  if (grade.size() != d) return {false, "grade vector size mismatch"};
  for (std::size_t i = 0; i < d; ++i) {
    Vec<F> col = mat_col(K, A.yd.P_of(grade[i]), i);
    for (std::size_t t = 0; t < d; ++t)
      if (!K.eq(col[t], t == i ? K.one() : K.zero()))
        return {false, "generator " + std::to_string(i + 1) +
                           " is not homogeneous of the stated degree"};
  }
  // positions of the degree-1 complement words (expect all of V free)
  auto pos_of_word = [&](std::size_t w) {
    const auto& bas = A.gq.basis[1];
    for (std::size_t t = 0; t < bas.size(); ++t)
      if (bas[t] == w) return t;
    throw ComputeError("degree-one generator got killed by relations");
  };
  using Pair = std::pair<std::size_t, std::size_t>;
  using TElem = std::map<Pair, typename F::Elem>;
  auto tensor_add = [&](TElem& x, const Pair& k, const typename F::Elem& c) {
    if (K.is_zero(c)) return;
    auto it = x.find(k);
    if (it == x.end()) {
      x.emplace(k, c);
    } else {
      it->second = K.add(it->second, c);
      if (K.is_zero(it->second)) x.erase(it);
    }
  };
  auto tensor_mul = [&](const TElem& x, const TElem& y) {
    TElem out;
    for (const auto& [kx, cx] : x)
      for (const auto& [ky, cy] : y) {
        SmashElem<F> l = smash_mul(A, SmashElem<F>{{kx.first, K.one()}},
                                   SmashElem<F>{{ky.first, K.one()}});
        SmashElem<F> r = smash_mul(A, SmashElem<F>{{kx.second, K.one()}},
                                   SmashElem<F>{{ky.second, K.one()}});
        for (const auto& [il, cl] : l)
          for (const auto& [ir, cr] : r)
            tensor_add(out, {il, ir},
                       K.mul(K.mul(cx, cy), K.mul(cl, cr)));
      }
    return out;
  };
  const gid e = 0;
  auto delta_gen = [&](std::size_t i) {
    TElem out;
    const std::size_t vi = A.index(1, pos_of_word(i), e);
    const std::size_t unit = A.index(0, 0, e);
    const std::size_t gi = A.index(0, 0, grade[i]);
    tensor_add(out, {vi, unit}, K.one());
    tensor_add(out, {gi, A.index(1, pos_of_word(i), e)}, K.one());
    return out;
  };
  for (std::size_t r = 0; r < rel2.dim(); ++r) {
    TElem acc;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const auto& c = rel2.rows.at(r, i * d + j);
        if (K.is_zero(c)) continue;
        TElem prod = tensor_mul(delta_gen(i), delta_gen(j));
        for (const auto& [k, cv] : prod) tensor_add(acc, k, K.mul(c, cv));
      }
    if (!acc.empty())
      return {false, "Delta is not multiplicative on relation " + std::to_string(r + 1)};
  }
  return {true, ""};
}

// ------------------------------------------------- transposition YD module --

/// YD module on the transpositions of S_m: basis [ij] for i < j with the
// convention [ji] = -[ij], grading P concentrated at (ij), and action
// g . [ij] = [g(i)g(j)] (so a sign appears whenever g flips the order).
template <class F>
YDModule<F> yd_transpositions(const F& K, const FinGroup& G, bool sign_twist = true) {
  std::vector<gid> trans;
  std::vector<std::pair<std::size_t, std::size_t>> moved;
  for (gid g = 1; g < G.order(); ++g) {
    const auto& p = G.perm(g);
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != i) pts.push_back(i);
    if (pts.size() == 2 && G.op(g, g) == 0) {
      trans.push_back(g);
      moved.emplace_back(pts[0], pts[1]);
    }
  }
  const std::size_t d = trans.size();
  auto pos_of = [&](gid t) {
    for (std::size_t i = 0; i < d; ++i)
      if (trans[i] == t) return i;
    throw ComputeError("conjugate of a transposition is not a transposition");
  };
  GModule<F> M;
  M.G = &G;
  M.K = K;
  M.d = d;
  for (gid g = 0; g < G.order(); ++g) {
    Matrix<F> R = mat_zeros(K, d, d);
    const auto& p = G.perm(g);
    for (std::size_t i = 0; i < d; ++i) {
      const bool flipped = p[moved[i].first] > p[moved[i].second];
      const auto s = (sign_twist && flipped) ? K.neg(K.one()) : K.one();
      R.at(pos_of(G.conj(g, trans[i])), i) = s;
    }
    M.rho.push_back(std::move(R));
  }
  YDModule<F> yd;
  yd.M = std::move(M);
  for (gid g = 0; g < G.order(); ++g) {
    Matrix<F> P = mat_zeros(K, d, d);
    for (std::size_t i = 0; i < d; ++i)
      if (trans[i] == g) P.at(i, i) = K.one();
    yd.P.emplace(g, std::move(P));
  }
  return yd;
}

// --------------------------------------------------- exterior/sign example --

// One-dimensional sign YD module over C2 in dimension dim: every generator
// sits in degree s, s acts by -1.  Braiding is -tau; the Nichols quotient is
// the exterior algebra.
template <class F>
YDModule<F> yd_sign_module(const F& K, const FinGroup& C2, std::size_t dim) {
  GModule<F> M;
  M.G = &C2;
  M.K = K;
  M.d = dim;
  M.rho.push_back(mat_identity(K, dim));
  M.rho.push_back(mat_scale(K, K.neg(K.one()), mat_identity(K, dim)));
  YDModule<F> yd;
  yd.M = std::move(M);
  yd.P.emplace(0, mat_zeros(K, dim, dim));
  yd.P.emplace(1, mat_identity(K, dim));
  return yd;
}

template <class F>
struct ExteriorSmashReport {
  bool pass = true;
  std::string detail;
  std::vector<std::size_t> nichols_dims;
  std::size_t smash_dim = 0;
  bool omega_central = false;
  bool omega_square_zero = false;
  bool delta_multiplicative = false;
};

// dim = 2 gives the eight-dimensional smash Lambda(V) # kC2 with the central
// volume element omega = v1 v2 of square zero.
template <class F>
ExteriorSmashReport<F> exterior_smash_report(const F& K, const FinGroup& C2,
                                             std::size_t dim = 2) {
  ExteriorSmashReport<F> rep;
  YDModule<F> yd = yd_sign_module(K, C2, dim);
  QYD<F> q = qyd_from_yd(yd);
  GradedQuotient<F> gq = nichols_quotient(q, dim + 1);
  rep.nichols_dims = gq.dims();
  SmashAlgebra<F> A = smash_algebra(gq, yd);
  rep.smash_dim = A.total_dim;
  if (dim == 2) {
    // omega = v1 v2 as an element of the degree-2 slice
    auto prods = gq_mul(gq, 1, 0, 1, 1);  // v1 * v2 over complement basis
    SmashElem<F> omega;
    for (const auto& [t, c] : prods) smash_add(K, omega, A.index(2, t, 0), c);
    rep.omega_central = smash_is_central(A, omega);
    SmashElem<F> sq = smash_mul(A, omega, omega);
    rep.omega_square_zero = sq.empty();
  }
  std::vector<gid> grade(dim, 1);
  CheckReport<F> dm = smash_delta_on_relations(A, grade, gq.rel[2]);
  rep.delta_multiplicative = dm.ok;
  rep.pass = rep.delta_multiplicative &&
             (dim != 2 || (rep.omega_central && rep.omega_square_zero));
  if (!rep.pass) rep.detail = dm.ok ? "volume element checks failed" : dm.detail;
  return rep;
}

// -------------------------------------------- nilpotent coefficient pairing --

// Double over a base with one generator pair [f, x] = a, a central with
// a^m = 0.  Monomials x^i a^k f^j; the pairing (f^n, x^n) is the (i=0, j=0)
// component after straightening f^n x^n.  Returns the coefficient of a^n
// for n = 0..N (zero once n >= m).
template <class F>
std::vector<typename F::Elem> nilpotent_pairing(const F& K, std::size_t N,
                                                std::size_t m) {
  using Key = std::array<std::size_t, 3>;  // (i, k, j): x^i a^k f^j
  std::vector<typename F::Elem> out{K.one()};
  for (std::size_t n = 1; n <= N; ++n) {
    std::map<Key, typename F::Elem> cur{{Key{n, 0, 0}, K.one()}};
    for (std::size_t step = 0; step < n; ++step) {
      std::map<Key, typename F::Elem> nxt;
      auto bump = [&](const Key& k, const typename F::Elem& c) {
        if (K.is_zero(c) || k[1] >= m) return;
        auto it = nxt.find(k);
        if (it == nxt.end()) nxt.emplace(k, c);
        else it->second = K.add(it->second, c);
      };
      for (const auto& [k, c] : cur) {
        // f * x^i a^k f^j = x^i a^k f^{j+1} + i x^{i-1} a^{k+1} f^j
        bump({k[0], k[1], k[2] + 1}, c);
        if (k[0] > 0) {
          auto ci = K.zero();
          for (std::size_t t = 0; t < k[0]; ++t) ci = K.add(ci, K.one());
          bump({k[0] - 1, k[1] + 1, k[2]}, K.mul(c, ci));
        }
      }
      cur = std::move(nxt);
    }
    auto it = cur.find(Key{0, n, 0});
    out.push_back(it == cur.end() ? K.zero() : it->second);
  }
  return out;
}

}  // namespace bd
