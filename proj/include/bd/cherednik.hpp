#pragma once
// Rational Cherednik algebras as triangular doubles: reflection data and
// roots, the (t, c) structure maps, PBW over the symmetrized halves, Dunkl
// commutator formulas, restricted quotients by invariant ideals, and the
// degree-filtered embedding into the double over the reflection-conjugation
// module.

#include <map>
#include <string>
#include <vector>

#include "bd/nichols.hpp"
#include "bd/sympoly.hpp"

namespace bd {

// --------------------------------------------------------- reflection data --

template <class F>
std::vector<gid> reflections(const GModule<F>& M) {
  const F& K = M.K;
  std::vector<gid> out;
  for (gid g = 1; g < M.G->order(); ++g) {
    Matrix<F> D = mat_sub(K, mat_identity(K, M.d), M.of(g));
    if (mat_rank(K, D) == 1) out.push_back(g);
  }
  return out;
}

template <class F>
struct RootDatum {
  gid s = 0;
  Vec<F> alpha_check;  // in V, first nonzero coordinate normalized to 1
  Vec<F> alpha;        // in V*, so that 1 - rho(s) = alpha_check . alpha^T
};

template <class F>
std::vector<RootDatum<F>> root_data(const GModule<F>& M) {
  const F& K = M.K;
  std::vector<RootDatum<F>> out;
  for (gid s : reflections(M)) {
    Matrix<F> D = mat_sub(K, mat_identity(K, M.d), M.of(s));
    std::size_t col = M.d, row = M.d;
    for (std::size_t j = 0; j < M.d && col == M.d; ++j)
      for (std::size_t i = 0; i < M.d; ++i)
        if (!K.is_zero(D.at(i, j))) {
          col = j;
          break;
        }
    Vec<F> ac = mat_col(K, D, col);
    for (std::size_t i = 0; i < M.d; ++i)
      if (!K.is_zero(ac[i])) {
        row = i;
        break;
      }
    const auto scale = K.inv(ac[row]);
    for (auto& x : ac) x = K.mul(scale, x);
    Vec<F> al = mat_row(K, D, row);
    RootDatum<F> rd{s, ac, al};
    for (std::size_t i = 0; i < M.d; ++i)
      for (std::size_t j = 0; j < M.d; ++j)
        if (!K.eq(D.at(i, j), K.mul(rd.alpha_check[i], rd.alpha[j])))
          throw ComputeError("reflection " + M.G->label(s) +
                             ": 1 - rho(s) is not rank one");
    out.push_back(std::move(rd));
  }
  return out;
}

// Class function c: values given on conjugacy-class representatives of the
// reflections; looked up through the class decomposition.
template <class F>
class ReflectionParams {
 public:
  ReflectionParams(const GModule<F>& M,
                   const std::map<gid, typename F::Elem>& by_rep)
      : G_(M.G) {
    const auto refl = reflections(M);
    const auto& classes = G_->conjugacy_classes();
    for (gid s : refl) {
      const std::size_t ci = G_->class_of(s);
      gid rep = classes[ci].front();
      auto it = by_rep.find(rep);
      if (it == by_rep.end()) {
        // accept any member of the class as the key
        for (gid m : classes[ci]) {
          auto jt = by_rep.find(m);
          if (jt != by_rep.end()) {
            it = jt;
            break;
          }
        }
      }
      if (it == by_rep.end())
        throw ConfigError("missing parameter for the reflection class of " +
                          G_->label(s));
      vals_.emplace(s, it->second);
    }
  }
  const typename F::Elem& of(gid s) const { return vals_.at(s); }
  const std::map<gid, typename F::Elem>& values() const { return vals_; }

 private:
  const FinGroup* G_;
  std::map<gid, typename F::Elem> vals_;
};

template <class F>
ReflectionParams<F> constant_params(const GModule<F>& M,
                                    const typename F::Elem& c) {
  std::map<gid, typename F::Elem> by;
  for (gid s : reflections(M)) by.emplace(s, c);
  return ReflectionParams<F>(M, by);
}

// ------------------------------------------------------ the (t, c) double --

template <class F>
QYD<F> cherednik_qyd(const GModule<F>& M, const typename F::Elem& t,
                     const ReflectionParams<F>& c) {
  const F& K = M.K;
  QYD<F> q;
  q.M = M;
  if (!K.is_zero(t))
    q.L.emplace(0, mat_scale(K, t, mat_identity(K, M.d)));
  for (const auto& [s, cs] : c.values()) {
    if (K.is_zero(cs)) continue;
    q.L.emplace(s, mat_scale(K, cs, mat_sub(K, mat_identity(K, M.d), M.of(s))));
  }
  return q;
}

// Commutativity criterion for U(V, delta): for every h, the bilinear map
// (v, w) -> delta(v - h(v)) (x) L_h(w) must be symmetric.
template <class F>
CheckReport<F> qyd_commutative_left(const QYD<F>& q) {
  const F& K = q.M.K;
  const std::size_t d = q.d();
  Matrix<F> D = delta_matrix(q);
  Matrix<F> Tau = tau_matrix(K, d);
  for (const auto& [h, Lh] : q.L) {
    Matrix<F> lhs = mat_kron(
        K, mat_mul(K, D, mat_sub(K, mat_identity(K, d), q.M.of(h))), Lh);
    if (!mat_eq(K, lhs, mat_mul(K, lhs, Tau)))
      return {false, "left half is not commutative: obstruction at " +
                         q.G().label(h)};
  }
  return {true, ""};
}

template <class F>
CheckReport<F> qyd_commutative_right(const QYD<F>& q) {
  const F& K = q.M.K;
  const std::size_t d = q.d();
  Matrix<F> Dr = delta_right_matrix(q);
  Matrix<F> Tau = tau_matrix(K, d);
  for (const auto& [h, Lh] : q.L) {
    Matrix<F> coact = mat_mul(
        K, Dr, mat_sub(K, mat_identity(K, d), mat_transpose(K, q.M.of(h))));
    Matrix<F> lhs = mat_kron(K, coact, mat_transpose(K, Lh));
    if (!mat_eq(K, lhs, mat_mul(K, lhs, Tau)))
      return {false, "right half is not commutative: obstruction at " +
                         q.G().label(h)};
  }
  return {true, ""};
}

// Degree-2 antisymmetric relations span{ e_i e_j - e_j e_i } (character-free).
template <class F>
Subspace<F> antisymmetric_relations(const F& K, std::size_t d) {
  Matrix<F> rows;
  rows.cols = d * d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix<F> one = mat_zeros(K, 1, d * d);
      one.at(0, i * d + j) = K.one();
      one.at(0, j * d + i) = K.neg(K.one());
      rows = mat_stack_rows(K, rows, one);
    }
  return subspace_from_rows(K, rows);
}

template <class F>
DoubleSpec<F> cherednik_double(const GModule<F>& M, const typename F::Elem& t,
                               const ReflectionParams<F>& c, std::size_t N) {
  const F& K = M.K;
  QYD<F> q = cherednik_qyd(M, t, c);
  Subspace<F> r2 = antisymmetric_relations(K, M.d);
  std::map<std::size_t, Subspace<F>> gens{{2, r2}};
  return double_from_relations(q, N, ideal_slices(K, M.d, gens, N),
                               ideal_slices(K, M.d, gens, N));
}

// Expected PBW slice dimensions: dim S^a(V) * |G| * dim S^b(V*).
template <class F>
CheckReport<F> cherednik_pbw_dims(const DoubleSpec<F>& spec) {
  for (std::size_t a = 0; a <= spec.N; ++a) {
    if (spec.leftBasis[a].size() != sym_basis(spec.d(), a).dim())
      return {false, "left slice at degree " + std::to_string(a) +
                         " has wrong dimension"};
    if (spec.rightBasis[a].size() != sym_basis(spec.d(), a).dim())
      return {false, "right slice at degree " + std::to_string(a) +
                         " has wrong dimension"};
  }
  return {true, ""};
}

// --------------------------------------------------------- Dunkl operators --

// Normal form of a monomial in the dual generators (degree = |exps|).
template <class F>
NormalForm<F> nf_of_dual_monomial(const DoubleSpec<F>& spec,
                                  const std::vector<std::size_t>& exps) {
  const F& K = spec.K();
  std::vector<std::size_t> word;
  for (std::size_t j = 0; j < exps.size(); ++j)
    for (std::size_t r = 0; r < exps[j]; ++r) word.push_back(j);
  const std::size_t n = word.size();
  Vec<F> red = subspace_reduce(K, spec.rightRel[n],
                               vec_unit(K, ipow(spec.d(), n), word_index(word, spec.d())));
  NormalForm<F> nf;
  for (std::size_t w = 0; w < red.size(); ++w) {
    if (K.is_zero(red[w])) continue;
    std::vector<std::size_t> ww = index_word(w, n, spec.d());
    nf_add_term(K, nf, nf_key({}, 0, std::vector<std::uint32_t>(ww.begin(), ww.end())),
                red[w]);
  }
  return nf;
}

// Commutators [phi, v_i] in the Cherednik double match the Dunkl formula
//   [phi, v] = t . 1 (x) dphi/dv + sum_s c_s <alpha_s, v> . s (x) (phi - s^{-1}(phi))/alpha_s
// for every monomial phi of degree <= N and every generator v_i.  The
// difference uses s^{-1} because straightening moves phi rightward past s
// (phi . s = s . s^{-1}(phi)); phi - s^{-1}(phi) = <phi, alpha_s^check> alpha_s
// in degree 1, so the quotient is polynomial.  For involutive real
// reflections s = s^{-1} and this is the classical divided difference.
template <class F>
CheckReport<F> dunkl_check(const GModule<F>& M, const typename F::Elem& t,
                           const ReflectionParams<F>& c, std::size_t N) {
  const F& K = M.K;
  const std::size_t d = M.d, ng = M.G->order();
  DoubleSpec<F> spec = cherednik_double(M, t, c, N);
  GModule<F> dual = module_dual(M);
  std::vector<RootDatum<F>> roots = root_data(M);
  for (std::size_t n = 1; n <= N; ++n) {
    SymBasis sb = sym_basis(d, n);
    SymBasis sb1 = sym_basis(d, n - 1);
    std::vector<Matrix<F>> srho;  // dual action on S^n(V*)
    for (gid g = 0; g < ng; ++g) srho.push_back(sym_rho(dual, g, n));
    for (std::size_t mi = 0; mi < sb.dim(); ++mi) {
      NormalForm<F> phi = nf_of_dual_monomial(spec, sb.exps[mi]);
      for (std::size_t i = 0; i < d; ++i) {
        NormalForm<F> vi;
        nf_add_term(K, vi, nf_key({static_cast<std::uint32_t>(i)}, 0, {}), K.one());
        NormalForm<F> comm = nf_commutator(spec, phi, vi);
        // project: group element -> S^{n-1}(V*) coordinates
        std::vector<Vec<F>> got(ng, vec_zeros(K, sb1.dim()));
        for (const auto& [key, cv] : comm.terms) {
          const auto& [lw, g, rw] = key;
          if (!lw.empty() || rw.size() != n - 1)
            return {false, "commutator has terms outside kG (x) U^+_{n-1}"};
          std::vector<std::size_t> e(d, 0);
          for (auto jj : rw) ++e[jj];
          const std::size_t p = sb1.index(e);
          got[g][p] = K.add(got[g][p], cv);
        }
        std::vector<Vec<F>> want(ng, vec_zeros(K, sb1.dim()));
        if (!K.is_zero(t)) {
          Matrix<F> der = sym_derivative(K, d, n, i);
          Vec<F> dphi = mat_col(K, der, mi);
          for (std::size_t p = 0; p < sb1.dim(); ++p)
            want[0][p] = K.add(want[0][p], K.mul(t, dphi[p]));
        }
        for (const auto& rd : roots) {
          const auto& cs = c.of(rd.s);
          const auto coef = K.mul(cs, rd.alpha[i]);
          if (K.is_zero(coef)) continue;
          Vec<F> diff = vec_unit(K, sb.dim(), mi);
          Vec<F> moved = mat_apply(K, srho[M.G->inv(rd.s)], diff);
          for (std::size_t p = 0; p < sb.dim(); ++p)
            diff[p] = K.sub(diff[p], moved[p]);
          Vec<F> quot = poly_divide_linear(K, d, n, diff, rd.alpha);
          for (std::size_t p = 0; p < sb1.dim(); ++p)
            want[rd.s][p] = K.add(want[rd.s][p], K.mul(coef, quot[p]));
        }
        for (gid g = 0; g < ng; ++g)
          for (std::size_t p = 0; p < sb1.dim(); ++p)
            if (!K.eq(got[g][p], want[g][p]))
              return {false, "Dunkl formula mismatch at degree " +
                                 std::to_string(n)};
      }
    }
  }
  return {true, ""};
}

// ------------------------------------------------------ restricted quotient --

// Tensor-level relations of the coinvariant halves: preimages under the
// abelianization of the invariant-ideal slices.
template <class F>
std::vector<Subspace<F>> coinvariant_relations(const GModule<F>& M, std::size_t N) {
  const F& K = M.K;
  std::vector<Subspace<F>> J = invariant_ideal_slices(M, N);
  std::vector<Subspace<F>> out;
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix<F> T = complement_test(K, J[n]);
    Matrix<F> pi = symmetrization_matrix(K, M.d, n);
    out.push_back(subspace_from_kernel(K, mat_mul(K, T, pi)));
  }
  return out;
}

template <class F>
DoubleSpec<F> restricted_cherednik_double(const GModule<F>& M,
                                          const ReflectionParams<F>& c,
                                          std::size_t N) {
  QYD<F> q = cherednik_qyd(M, M.K.zero(), c);
  return double_from_relations(q, N, coinvariant_relations(M, N),
                               coinvariant_relations(module_dual(M), N));
}

template <class F>
struct RestrictedReport {
  std::vector<std::size_t> coinv_dims;   // left half, degrees 0..N
  std::vector<std::size_t> coinv_dual;   // right half
  bool complete = false;                 // both halves vanish at degree N
  std::size_t total_dim = 0;             // product, meaningful when complete
};

template <class F>
RestrictedReport<F> restricted_dims(const GModule<F>& M,
                                    const ReflectionParams<F>& c, std::size_t N) {
  DoubleSpec<F> spec = restricted_cherednik_double(M, c, N);
  RestrictedReport<F> rep;
  std::size_t l = 0, r = 0;
  for (std::size_t n = 0; n <= N; ++n) {
    rep.coinv_dims.push_back(spec.leftBasis[n].size());
    rep.coinv_dual.push_back(spec.rightBasis[n].size());
    l += spec.leftBasis[n].size();
    r += spec.rightBasis[n].size();
  }
  rep.complete = rep.coinv_dims[N] == 0 && rep.coinv_dual[N] == 0;
  rep.total_dim = l * M.G->order() * r;
  return rep;
}

// ------------------------------------------------------------- embedding ---

// Twisted conjugation module on the reflections: basis [s], grading P
// concentrated at s, and action g . [s] = lambda(g,s) [g s g^{-1}] where the
// scalar is fixed by the coroot transport  g(alpha_check_s) =
// lambda(g,s) alpha_check_{g s g^{-1}}.
template <class F>
YDModule<F> yd_reflection_conjugation(const F& K, const GModule<F>& M) {
  const FinGroup& G = *M.G;
  std::vector<RootDatum<F>> roots = root_data(M);
  const std::size_t d = roots.size();
  auto pos_of = [&](gid t) {
    for (std::size_t i = 0; i < d; ++i)
      if (roots[i].s == t) return i;
    throw ComputeError("reflections are not closed under conjugation");
  };
  GModule<F> W;
  W.G = &G;
  W.K = K;
  W.d = d;
  for (gid g = 0; g < G.order(); ++g) {
    Matrix<F> R = mat_zeros(K, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t j = pos_of(G.conj(g, roots[i].s));
      Vec<F> im = mat_apply(K, M.of(g), roots[i].alpha_check);
      const Vec<F>& tgt = roots[j].alpha_check;
      typename F::Elem lam = K.zero();
      for (std::size_t k = 0; k < tgt.size(); ++k)
        if (!K.is_zero(tgt[k])) {
          lam = K.div(im[k], tgt[k]);
          break;
        }
      for (std::size_t k = 0; k < tgt.size(); ++k)
        if (!K.eq(im[k], K.mul(lam, tgt[k])))
          throw ComputeError("coroot transport is not scalar");
      R.at(j, i) = lam;
    }
    W.rho.push_back(std::move(R));
  }
  YDModule<F> yd;
  yd.M = std::move(W);
  for (gid g = 0; g < G.order(); ++g) {
    Matrix<F> P = mat_zeros(K, d, d);
    for (std::size_t i = 0; i < d; ++i)
      if (roots[i].s == g) P.at(i, i) = K.one();
    yd.P.emplace(g, std::move(P));
  }
  return yd;
}

// kappa_c with sum_s c_s (1 - rho(s)) = kappa_c . id; requires the sum to be
// scalar (V absolutely irreducible); nullopt when it is not scalar.
template <class F>
std::optional<typename F::Elem> kappa_of(const GModule<F>& M,
                                         const ReflectionParams<F>& c) {
  const F& K = M.K;
  Matrix<F> S = mat_zeros(K, M.d, M.d);
  for (const auto& [s, cs] : c.values())
    S = mat_add(K, S,
                mat_scale(K, cs, mat_sub(K, mat_identity(K, M.d), M.of(s))));
  const auto k0 = S.at(0, 0);
  if (!mat_eq(K, S, mat_scale(K, k0, mat_identity(K, M.d)))) return std::nullopt;
  return k0;
}

// Quadratic tau-cover relations ker(id + Psi) cap ker(id + tau) and the
// corresponding graded quotient dimensions.
template <class F>
Subspace<F> quad_tau_relations(const F& K, const Matrix<F>& Psi, std::size_t d) {
  Matrix<F> I2 = mat_identity(K, d * d);
  Subspace<F> a = subspace_from_kernel(K, mat_add(K, I2, Psi));
  Subspace<F> b = subspace_from_kernel(K, mat_add(K, I2, tau_matrix(K, d)));
  return subspace_intersect(K, a, b);
}

template <class F>
struct EmbedReport {
  bool pass = false;
  bool degenerate = false;       // t != 0 but kappa_c is 0 or not scalar
  std::string detail;
  typename F::Elem t_prime;
  std::vector<std::size_t> quad_tau_dims;  // graded dims of the tau-cover half
  bool relations_ok = false;     // images of commutativity relations
  bool commutators_ok = false;   // straightened cross commutators
  bool injective = false;        // rank per bidegree up to N
};

// Defining-relation membership, cross-commutator matching, and injectivity of
// the map  v -> sum_s c_s <alpha_s, v>[s],  f -> sum_s <f, alpha_check_s>[s]*,
// g -> g  from the (t, c) double into the double over the conjugation module.
template <class F>
EmbedReport<F> embed_check(const GModule<F>& M, const typename F::Elem& t,
                           const ReflectionParams<F>& c, std::size_t N) {
  const F& K = M.K;
  const std::size_t ng = M.G->order();
  EmbedReport<F> rep;
  rep.t_prime = K.zero();
  std::vector<RootDatum<F>> roots = root_data(M);
  const std::size_t nrefl = roots.size();
  YDModule<F> ydY = yd_reflection_conjugation(K, M);

  if (!K.is_zero(t)) {
    auto kappa = kappa_of(M, c);
    if (!kappa || K.is_zero(*kappa)) {
      rep.degenerate = true;
      rep.detail = "sum_s c_s (1 - rho(s)) is not an invertible scalar";
      return rep;
    }
    rep.t_prime = K.div(t, *kappa);
  }

  // QYD structure on Y: L_s projects onto [s]; L_e = t' id when t' != 0.
  QYD<F> qY;
  qY.M = ydY.M;
  if (!K.is_zero(rep.t_prime))
    qY.L.emplace(0, mat_scale(K, rep.t_prime, mat_identity(K, nrefl)));
  for (std::size_t i = 0; i < nrefl; ++i) {
    Matrix<F> P = mat_zeros(K, nrefl, nrefl);
    P.at(i, i) = K.one();
    gid s = roots[i].s;
    if (s == 0) throw ComputeError("identity listed as reflection");
    auto it = qY.L.find(s);
    if (it == qY.L.end()) qY.L.emplace(s, std::move(P));
    else it->second = mat_add(K, it->second, P);
  }

  DoubleSpec<F> big;
  if (K.is_zero(t)) {
    big = minimal_double(qY, N);
  } else {
    Matrix<F> Psi = yd_braiding(ydY);
    YDModule<F> ydYd = yd_dual(ydY);
    Matrix<F> PsiD = yd_braiding(ydYd);
    Subspace<F> r2l = quad_tau_relations(K, Psi, nrefl);
    Subspace<F> r2r = quad_tau_relations(K, PsiD, nrefl);
    big = double_from_relations(qY, N,
                                ideal_slices(K, nrefl, {{2, r2l}}, N),
                                ideal_slices(K, nrefl, {{2, r2r}}, N));
  }
  for (std::size_t n = 0; n <= N; ++n)
    rep.quad_tau_dims.push_back(big.leftBasis[n].size());

  // images of the generators
  std::vector<NormalForm<F>> img_v(M.d), img_f(M.d);
  for (std::size_t i = 0; i < M.d; ++i) {
    for (std::size_t k = 0; k < nrefl; ++k) {
      const auto cv = K.mul(c.of(roots[k].s), roots[k].alpha[i]);
      nf_add_term(K, img_v[i], nf_key({static_cast<std::uint32_t>(k)}, 0, {}), cv);
      nf_add_term(K, img_f[i], nf_key({}, 0, {static_cast<std::uint32_t>(k)}),
                  roots[k].alpha_check[i]);
    }
  }
  auto img_g = [&](gid g) {
    NormalForm<F> nf;
    nf_add_term(K, nf, nf_key({}, g, {}), K.one());
    return nf;
  };

  // 1. commutativity relations of both halves map into the relations of big
  rep.relations_ok = true;
  for (std::size_t i = 0; i < M.d && rep.relations_ok; ++i)
    for (std::size_t j = i + 1; j < M.d && rep.relations_ok; ++j) {
      NormalForm<F> lv = nf_commutator(big, img_v[i], img_v[j]);
      if (!nf_is_zero(lv)) rep.relations_ok = false;
      NormalForm<F> lf = nf_commutator(big, img_f[i], img_f[j]);
      if (!nf_is_zero(lf)) rep.relations_ok = false;
    }
  if (!rep.relations_ok) {
    rep.detail = "images of the commutativity relations do not vanish";
    return rep;
  }

  // 2. straightened cross commutators match t <f,v> 1 + sum_s c_s <f,(1-s)v> s
  rep.commutators_ok = true;
  for (std::size_t j = 0; j < M.d && rep.commutators_ok; ++j)
    for (std::size_t i = 0; i < M.d && rep.commutators_ok; ++i) {
      NormalForm<F> got = nf_commutator(big, img_f[j], img_v[i]);
      NormalForm<F> want;
      if (j == i) nf_add_term(K, want, nf_key({}, 0, {}), t);
      for (const auto& rd : roots) {
        Vec<F> moved = mat_col(K, M.of(rd.s), i);
        auto cv = K.mul(c.of(rd.s),
                        K.sub(i == j ? K.one() : K.zero(), moved[j]));
        nf_add_term(K, want, nf_key({}, rd.s, {}), cv);
      }
      NormalForm<F> diff = nf_add(K, got, nf_neg(K, want));
      if (!nf_is_zero(diff)) rep.commutators_ok = false;
    }
  if (!rep.commutators_ok) {
    rep.detail = "cross commutators do not match the closed form";
    return rep;
  }

  // 3. injectivity on PBW slices of total degree <= min(3, N); the image of
  // the t = 0 double is its restricted quotient, so that is what embeds.
  DoubleSpec<F> small = K.is_zero(t) ? restricted_cherednik_double(M, c, N)
                                     : cherednik_double(M, t, c, N);
  const std::size_t cap = std::min<std::size_t>(3, N);
  rep.injective = true;
  for (std::size_t a = 0; a <= cap && rep.injective; ++a)
    for (std::size_t b = 0; a + b <= cap && rep.injective; ++b) {
      const auto& lb = small.leftBasis[a];
      const auto& rb = small.rightBasis[b];
      const std::size_t cols = lb.size() * ng * rb.size();
      std::vector<Vec<F>> images;
      for (std::size_t li = 0; li < lb.size(); ++li)
        for (gid g = 0; g < ng; ++g)
          for (std::size_t ri = 0; ri < rb.size(); ++ri) {
            NormalForm<F> acc = img_g(g);
            std::vector<std::size_t> wl = index_word(lb[li], a, M.d);
            for (std::size_t p = wl.size(); p-- > 0;)
              acc = nf_mul(big, img_v[wl[p]], acc);
            std::vector<std::size_t> wr = index_word(rb[ri], b, M.d);
            for (std::size_t p = 0; p < wr.size(); ++p)
              acc = nf_mul(big, acc, img_f[wr[p]]);
            images.push_back(nf_slice_coords(big, acc, a, b));
          }
      Matrix<F> im = mat_zeros(K, images.size(),
                               images.empty() ? 1 : images.front().size());
      for (std::size_t r = 0; r < images.size(); ++r)
        for (std::size_t cc = 0; cc < images[r].size(); ++cc)
          im.at(r, cc) = images[r][cc];
      if (mat_rank(K, im) != cols) rep.injective = false;
    }
  if (!rep.injective) {
    rep.detail = "embedding is not injective on some PBW slice";
    return rep;
  }
  rep.pass = true;
  return rep;
}

}  // namespace bd
