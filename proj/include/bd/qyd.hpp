#pragma once
// Quasicoactions of a group algebra kG on a G-module V, stored as the sparse
// family {L_h} of endomorphisms in delta(v) = sum_h h (x) L_h(v).  The
// compatibility axiom is g(L_h(v)) = L_{g h g^{-1}}(g(v)); the commutation
// pairing beta(f, v) = sum_h <f, L_h v> h is equivalent data.
//
// Genuine Yetter-Drinfeld module structures (coactions) over kG are gradings
// by complete orthogonal idempotents {P_h}; their braiding is
// Psi(y (x) z) = h(z) (x) y for y in the h-component.
//
// Index conventions (fixed across the library):
//   kG (x) V      : (h, w)  ->  h*d + w          (group leg major)
//   V* (x) kG     : (w, h)  ->  w*|G| + h        (module leg major)
//   V^{(x) n}     : (w1..wn) -> sum w_i d^{n-i}  (leftmost leg major)

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bd/gmodule.hpp"

namespace bd {

// Group algebra elements as dense coefficient vectors indexed by element id.
template <class F>
using GAVec = Vec<F>;

template <class F>
GAVec<F> ga_zero(const F& K, const FinGroup& G) {
  return vec_zeros(K, G.order());
}

template <class F>
GAVec<F> ga_of(const F& K, const FinGroup& G, gid g) {
  return vec_unit(K, G.order(), g);
}

template <class F>
GAVec<F> ga_mul(const F& K, const FinGroup& G, const GAVec<F>& a, const GAVec<F>& b) {
  GAVec<F> c = ga_zero(K, G);
  for (gid x = 0; x < G.order(); ++x) {
    if (K.is_zero(a[x])) continue;
    for (gid y = 0; y < G.order(); ++y) {
      if (K.is_zero(b[y])) continue;
      gid z = G.op(x, y);
      c[z] = K.add(c[z], K.mul(a[x], b[y]));
    }
  }
  return c;
}

// Counit: sum of coefficients.
template <class F>
typename F::Elem ga_eps(const F& K, const GAVec<F>& a) {
  auto s = K.zero();
  for (const auto& x : a) s = K.add(s, x);
  return s;
}

template <class F>
bool ga_is_class_constant(const F& K, const FinGroup& G, const GAVec<F>& a) {
  for (const auto& cls : G.conjugacy_classes())
    for (std::size_t i = 1; i < cls.size(); ++i)
      if (!K.eq(a[cls[i]], a[cls[0]])) return false;
  return true;
}

template <class F>
std::string ga_str(const F& K, const FinGroup& G, const GAVec<F>& a) {
  std::string out;
  for (gid g = 0; g < G.order(); ++g) {
    if (K.is_zero(a[g])) continue;
    if (!out.empty()) out += " + ";
    out += K.str(a[g]) + "*" + G.label(g);
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------------- QYD ---

template <class F>
struct QYD {
  GModule<F> M;
  std::map<gid, Matrix<F>> L;  // missing key == zero endomorphism

  const FinGroup& G() const { return *M.G; }
  std::size_t d() const { return M.d; }

  Matrix<F> L_of(gid h) const {
    auto it = L.find(h);
    return it == L.end() ? mat_zeros(M.K, M.d, M.d) : it->second;
  }
};

// Verifies the module axioms and g(L_h(v)) = L_{ghg^{-1}}(g(v)), i.e.
// rho(g) L_h = L_{g h g^{-1}} rho(g) for all g, h.
template <class F>
CheckReport<F> qyd_check(const QYD<F>& q) {
  CheckReport<F> mod = check_module(q.M);
  if (!mod.ok) return mod;
  const F& K = q.M.K;
  const FinGroup& G = q.G();
  for (gid g = 0; g < G.order(); ++g) {
    for (const auto& [h, Lh] : q.L) {
      gid hc = G.conj(g, h);
      Matrix<F> lhs = mat_mul(K, q.M.of(g), Lh);
      Matrix<F> rhs = mat_mul(K, q.L_of(hc), q.M.of(g));
      if (!mat_eq(K, lhs, rhs))
        return {false, "equivariance fails at g=" + G.label(g) + ", h=" + G.label(h)};
    }
    // keys missing from L but hit by conjugation of a nonzero L_h are
    // covered above: lhs nonzero vs rhs zero reports a failure.
  }
  return {true, ""};
}

// Commutation pairing beta(f_j, v_i) as a group algebra element.
template <class F>
GAVec<F> qyd_beta(const QYD<F>& q, std::size_t j, std::size_t i) {
  const F& K = q.M.K;
  GAVec<F> out = ga_zero(K, q.G());
  for (const auto& [h, Lh] : q.L) out[h] = Lh.at(j, i);
  return out;
}

// delta as a matrix V -> kG (x) V.
template <class F>
Matrix<F> delta_matrix(const QYD<F>& q) {
  const F& K = q.M.K;
  const std::size_t d = q.d(), n = q.G().order();
  Matrix<F> D = mat_zeros(K, n * d, d);
  for (const auto& [h, Lh] : q.L)
    for (std::size_t w = 0; w < d; ++w)
      for (std::size_t v = 0; v < d; ++v) D.at(h * d + w, v) = Lh.at(w, v);
  return D;
}

// Right-handed quasicoaction delta_r : V* -> V* (x) kG,
// delta_r(f) = sum_h (f o L_h) (x) h; as a matrix in the dual basis the
// (w,h) coordinate of delta_r(f_j) is (L_h)_{j,w}.
template <class F>
Matrix<F> delta_right_matrix(const QYD<F>& q) {
  const F& K = q.M.K;
  const std::size_t d = q.d(), n = q.G().order();
  Matrix<F> D = mat_zeros(K, d * n, d);
  for (const auto& [h, Lh] : q.L)
    for (std::size_t w = 0; w < d; ++w)
      for (std::size_t j = 0; j < d; ++j) D.at(w * n + h, j) = Lh.at(j, w);
  return D;
}

template <class F>
QYD<F> qyd_trivial(const GModule<F>& M, const typename F::Elem& lambda) {
  QYD<F> q;
  q.M = M;
  if (!M.K.is_zero(lambda))
    q.L.emplace(0, mat_scale(M.K, lambda, mat_identity(M.K, M.d)));
  return q;
}

// Linear combination of quasicoactions on the same underlying module.
template <class F>
QYD<F> qyd_mix(const std::vector<std::pair<typename F::Elem, const QYD<F>*>>& parts) {
  if (parts.empty()) throw ConfigError("mixture: at least one part required");
  const F& K = parts[0].second->M.K;
  QYD<F> out;
  out.M = parts[0].second->M;
  for (const auto& [coeff, qp] : parts) {
    if (qp->M.d != out.M.d || qp->M.G != out.M.G)
      throw ConfigError("mixture: parts live on different modules");
    for (const auto& [h, Lh] : qp->L) {
      Matrix<F> scaled = mat_scale(K, coeff, Lh);
      auto it = out.L.find(h);
      if (it == out.L.end())
        out.L.emplace(h, std::move(scaled));
      else
        it->second = mat_add(K, it->second, scaled);
    }
  }
  // drop exact zeros so sparsity stays meaningful
  for (auto it = out.L.begin(); it != out.L.end();) {
    if (mat_is_zero(K, it->second))
      it = out.L.erase(it);
    else
      ++it;
  }
  return out;
}

// -------------------------------------------------------------- YD modules --

template <class F>
struct YDModule {
  GModule<F> M;
  std::map<gid, Matrix<F>> P;  // grading projectors; missing key == zero

  const FinGroup& G() const { return *M.G; }
  std::size_t d() const { return M.d; }

  Matrix<F> P_of(gid h) const {
    auto it = P.find(h);
    return it == P.end() ? mat_zeros(M.K, M.d, M.d) : it->second;
  }
};

// Complete orthogonal idempotents + equivariance rho(g) P_h rho(g)^{-1} = P_{ghg^{-1}}.
template <class F>
CheckReport<F> yd_check(const YDModule<F>& y) {
  CheckReport<F> mod = check_module(y.M);
  if (!mod.ok) return mod;
  const F& K = y.M.K;
  const FinGroup& G = y.G();
  Matrix<F> sum = mat_zeros(K, y.d(), y.d());
  for (const auto& [h, Ph] : y.P) sum = mat_add(K, sum, Ph);
  if (!mat_eq(K, sum, mat_identity(K, y.d())))
    return {false, "grading projectors do not sum to the identity"};
  for (const auto& [h, Ph] : y.P)
    for (const auto& [k, Pk] : y.P) {
      Matrix<F> prod = mat_mul(K, Ph, Pk);
      Matrix<F> expect = (h == k) ? Ph : mat_zeros(K, y.d(), y.d());
      if (!mat_eq(K, prod, expect))
        return {false, "projectors at " + G.label(h) + ", " + G.label(k) +
                           " are not orthogonal idempotents"};
    }
  for (gid g = 0; g < G.order(); ++g)
    for (const auto& [h, Ph] : y.P) {
      Matrix<F> lhs = mat_mul(K, y.M.of(g), Ph);
      Matrix<F> rhs = mat_mul(K, y.P_of(G.conj(g, h)), y.M.of(g));
      if (!mat_eq(K, lhs, rhs))
        return {false, "grading not compatible with the action at g=" +
                           G.label(g) + ", h=" + G.label(h)};
    }
  return {true, ""};
}

template <class F>
QYD<F> qyd_from_yd(const YDModule<F>& y) {
  QYD<F> q;
  q.M = y.M;
  for (const auto& [h, Ph] : y.P)
    if (!mat_is_zero(y.M.K, Ph)) q.L.emplace(h, Ph);
  return q;
}

// Braiding Psi(y (x) z) = h(z) (x) y for y in the h-component:
// Psi = sum_h (rho(h) (x) id) Tau (P_h (x) id).
template <class F>
Matrix<F> tau_matrix(const F& K, std::size_t d) {
  Matrix<F> T = mat_zeros(K, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) T.at(j * d + i, i * d + j) = K.one();
  return T;
}

template <class F>
Matrix<F> yd_braiding(const YDModule<F>& y) {
  const F& K = y.M.K;
  const std::size_t d = y.d();
  Matrix<F> T = tau_matrix(K, d);
  Matrix<F> I = mat_identity(K, d);
  Matrix<F> Psi = mat_zeros(K, d * d, d * d);
  for (const auto& [h, Ph] : y.P) {
    Matrix<F> term = mat_mul(K, mat_kron(K, y.M.of(h), I),
                             mat_mul(K, T, mat_kron(K, Ph, I)));
    Psi = mat_add(K, Psi, term);
  }
  return Psi;
}

// Dual YD module: dual action, projectors P*_g = transpose(P_{g^{-1}}).
template <class F>
YDModule<F> yd_dual(const YDModule<F>& y) {
  YDModule<F> D;
  D.M = module_dual(y.M);
  for (const auto& [h, Ph] : y.P)
    D.P.emplace(y.G().inv(h), mat_transpose(y.M.K, Ph));
  return D;
}

// ------------------------------------------------- 1-dim classification ----

template <class F>
struct OneDimReport {
  bool character_ok = false;   // alpha is a multiplicative character
  bool central_ok = false;     // p lies in the centre of kG (class-constant)
  bool is_qyd = false;         // both of the above
  bool is_genuine_yd = false;  // p is a grouplike central element
  std::string detail;
  QYD<F> structure;  // populated when is_qyd
};

// One-dimensional quasi-YD modules correspond to pairs (alpha, p) with alpha
// a character of G and p a central element of kG; the structure is genuine
// YD exactly when p is a central group element.
template <class F>
OneDimReport<F> classify_one_dim(const F& K, const FinGroup& G,
                                 const std::vector<typename F::Elem>& alpha,
                                 const GAVec<F>& p) {
  OneDimReport<F> rep;
  if (alpha.size() != G.order() || p.size() != G.order()) {
    rep.detail = "alpha and p must have one entry per group element";
    return rep;
  }
  rep.character_ok = true;
  for (gid a = 0; a < G.order() && rep.character_ok; ++a) {
    if (K.is_zero(alpha[a])) rep.character_ok = false;
    for (gid b = 0; b < G.order() && rep.character_ok; ++b)
      if (!K.eq(K.mul(alpha[a], alpha[b]), alpha[G.op(a, b)]))
        rep.character_ok = false;
  }
  rep.central_ok = ga_is_class_constant(K, G, p);
  rep.is_qyd = rep.character_ok && rep.central_ok;
  if (!rep.character_ok) rep.detail = "alpha is not a multiplicative character";
  else if (!rep.central_ok) rep.detail = "p is not central in kG";
  if (rep.is_qyd) {
    rep.structure.M = module_character(K, G, alpha);
    for (gid h = 0; h < G.order(); ++h) {
      if (K.is_zero(p[h])) continue;
      Matrix<F> Lh = mat_zeros(K, 1, 1);
      Lh.at(0, 0) = p[h];
      rep.structure.L.emplace(h, std::move(Lh));
    }
    // grouplike central elements of kG = central group elements
    std::size_t nonzero = 0;
    gid where = 0;
    for (gid h = 0; h < G.order(); ++h)
      if (!K.is_zero(p[h])) { ++nonzero; where = h; }
    rep.is_genuine_yd =
        nonzero == 1 && K.eq(p[where], K.one()) && G.is_central(where);
  }
  return rep;
}

// ------------------------------------------------- Y(V) and subquotients ---

// Induce a quasicoaction along a subquotient presentation mu: V -> W,
// nu: W -> V of G-modules: L^V_h = nu o L^W_h o mu.
template <class F>
QYD<F> induce_qyd(const QYD<F>& w, const GModule<F>& V, const Matrix<F>& mu,
                  const Matrix<F>& nu) {
  const F& K = V.K;
  QYD<F> out;
  out.M = V;
  for (const auto& [h, Lh] : w.L) {
    Matrix<F> ind = mat_mul(K, nu, mat_mul(K, Lh, mu));
    if (!mat_is_zero(K, ind)) out.L.emplace(h, std::move(ind));
  }
  return out;
}

template <class F>
struct PerfectPair {
  YDModule<F> yd;  // Y(V) = kG (x) V with g(x (x) v) = gxg^{-1} (x) g(v)
  Matrix<F> mu;    // V -> Y(V), equals the delta matrix
  Matrix<F> nu;    // Y(V) -> V, counit on the group leg
};

/// The universal YD envelope of a quasi-YD module: Y(V) = kG (x) V graded by
// its group leg, with mu = delta and nu = (eps (x) id) presenting (V, delta)
// as a subquotient.
template <class F>
PerfectPair<F> build_YV(const QYD<F>& q) {
  const F& K = q.M.K;
  const FinGroup& G = q.G();
  const std::size_t d = q.d(), n = G.order(), D = n * d;
  PerfectPair<F> out;
  out.yd.M.G = &G;
  out.yd.M.K = K;
  out.yd.M.d = D;
  out.yd.M.rho.resize(n);
  for (gid g = 0; g < n; ++g) {
    Matrix<F> R = mat_zeros(K, D, D);
    for (gid x = 0; x < n; ++x) {
      gid y = G.conj(g, x);
      for (std::size_t w = 0; w < d; ++w)
        for (std::size_t v = 0; v < d; ++v)
          R.at(y * d + w, x * d + v) = q.M.of(g).at(w, v);
    }
    out.yd.M.rho[g] = std::move(R);
  }
  for (gid h = 0; h < n; ++h) {
    Matrix<F> Ph = mat_zeros(K, D, D);
    for (std::size_t w = 0; w < d; ++w) Ph.at(h * d + w, h * d + w) = K.one();
    out.yd.P.emplace(h, std::move(Ph));
  }
  out.mu = delta_matrix(q);
  out.nu = mat_zeros(K, d, D);
  for (gid x = 0; x < n; ++x)
    for (std::size_t v = 0; v < d; ++v) out.nu.at(v, x * d + v) = K.one();
  return out;
}

// Full audit of the Y(V) presentation: the YD axioms on Y(V), equivariance
// of mu and nu, recovery of the quasicoaction, and nu o mu = sum_h L_h.
template <class F>
CheckReport<F> perfect_pair_check(const QYD<F>& q, const PerfectPair<F>& pp) {
  const F& K = q.M.K;
  const FinGroup& G = q.G();
  CheckReport<F> yd = yd_check(pp.yd);
  if (!yd.ok) return yd;
  for (gid g = 0; g < G.order(); ++g) {
    if (!mat_eq(K, mat_mul(K, pp.yd.M.of(g), pp.mu), mat_mul(K, pp.mu, q.M.of(g))))
      return {false, "mu is not equivariant at g=" + G.label(g)};
    if (!mat_eq(K, mat_mul(K, q.M.of(g), pp.nu), mat_mul(K, pp.nu, pp.yd.M.of(g))))
      return {false, "nu is not equivariant at g=" + G.label(g)};
  }
  QYD<F> yd_as_qyd = qyd_from_yd(pp.yd);
  QYD<F> induced = induce_qyd(yd_as_qyd, q.M, pp.mu, pp.nu);
  for (gid h = 0; h < G.order(); ++h)
    if (!mat_eq(K, induced.L_of(h), q.L_of(h)))
      return {false, "induced quasicoaction differs at h=" + G.label(h)};
  Matrix<F> numu = mat_mul(K, pp.nu, pp.mu);
  Matrix<F> sumL = mat_zeros(K, q.d(), q.d());
  for (const auto& [h, Lh] : q.L) sumL = mat_add(K, sumL, Lh);
  if (!mat_eq(K, numu, sumL)) return {false, "nu o mu != sum_h L_h"};
  return {true, ""};
}

}  // namespace bd
