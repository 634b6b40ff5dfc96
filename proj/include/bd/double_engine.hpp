#pragma once
// Truncated triangular doubles  U^- (x) kG (x) U^+  attached to a
// quasicoaction delta on V, where U^- = T(V)/I^-, U^+ = T(V*)/I^+ are graded
// quotients by degreewise relation subspaces (free: zero; minimal: the qb
// factorial kernels; or supplied, e.g. symmetrized ideals).
//
// Elements are straightened to normal form sum_k  c_k * (word in V) g (word
// in V*) using the rewrite rules
//     g v   ->  (g |> v) g
//     f v   ->  v f + sum_h <f, L_h v> h
//     f g   ->  g (f <| g)
// (leftmost reducible pair first), then reducing the separated halves modulo
// the relation subspaces onto their canonical complement coordinates.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "bd/braided_ops.hpp"

namespace bd {

// ------------------------------------------------------------- DoubleSpec --

template <class F>
struct DoubleSpec {
  QYD<F> q;
  std::size_t N = 0;                   // degree truncation (inclusive)
  std::vector<Subspace<F>> leftRel;    // degrees 0..N, in V^{(x)n}
  std::vector<Subspace<F>> rightRel;   // degrees 0..N, in V*^{(x)n}
  std::vector<std::vector<std::size_t>> leftBasis, rightBasis;  // complement words

  const F& K() const { return q.M.K; }
  const FinGroup& G() const { return q.G(); }
  std::size_t d() const { return q.d(); }
};

template <class F>
void double_fill_bases(DoubleSpec<F>& spec) {
  spec.leftBasis.clear();
  spec.rightBasis.clear();
  for (std::size_t n = 0; n <= spec.N; ++n) {
    spec.leftBasis.push_back(subspace_complement_coords(spec.leftRel[n]));
    spec.rightBasis.push_back(subspace_complement_coords(spec.rightRel[n]));
  }
}

template <class F>
DoubleSpec<F> free_double(const QYD<F>& q, std::size_t N) {
  DoubleSpec<F> s;
  s.q = q;
  s.N = N;
  for (std::size_t n = 0; n <= N; ++n) {
    s.leftRel.push_back(subspace_zero(q.M.K, ipow(q.d(), n)));
    s.rightRel.push_back(subspace_zero(q.M.K, ipow(q.d(), n)));
  }
  double_fill_bases(s);
  return s;
}

template <class F>
DoubleSpec<F> minimal_double(const QYD<F>& q, std::size_t N) {
  DoubleSpec<F> s;
  s.q = q;
  s.N = N;
  s.leftRel = qb_kernel_chain(q, N);
  s.rightRel = qb_kernel_chain_right(q, N);
  double_fill_bases(s);
  return s;
}

// Two-sided ideal slices generated by homogeneous subspaces gens[m] <= V^{(x)m}:
// I_n = sum_{a+m+b=n} V^{(x)a} (x) gens_m (x) V^{(x)b}.
template <class F>
std::vector<Subspace<F>> ideal_slices(const F& K, std::size_t d,
                                      const std::map<std::size_t, Subspace<F>>& gens,
                                      std::size_t N) {
  std::vector<Subspace<F>> out;
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix<F> rows;
    rows.cols = ipow(d, n);
    for (const auto& [m, g] : gens) {
      if (m > n || g.dim() == 0) continue;
      for (std::size_t a = 0; a + m <= n; ++a) {
        const std::size_t b = n - m - a;
        Matrix<F> block = mat_kron(
            K, mat_identity(K, ipow(d, a)),
            mat_kron(K, g.rows, mat_identity(K, ipow(d, b))));
        rows = mat_stack_rows(K, rows, block);
      }
    }
    out.push_back(subspace_from_rows(K, rows));
  }
  return out;
}

// Quotient of both halves by the ideals generated by the degree-2 minimal
// relations (quadratic cover of the minimal double).
template <class F>
DoubleSpec<F> quadratic_double(const QYD<F>& q, std::size_t N) {
  const F& K = q.M.K;
  DoubleSpec<F> s;
  s.q = q;
  s.N = N;
  Subspace<F> r2l = qb_kernel_chain(q, std::min<std::size_t>(2, N)).back();
  Subspace<F> r2r = qb_kernel_chain_right(q, std::min<std::size_t>(2, N)).back();
  if (N < 2) return free_double(q, N);
  s.leftRel = ideal_slices(K, q.d(), {{2, r2l}}, N);
  s.rightRel = ideal_slices(K, q.d(), {{2, r2r}}, N);
  double_fill_bases(s);
  return s;
}

template <class F>
DoubleSpec<F> double_from_relations(const QYD<F>& q, std::size_t N,
                                    std::vector<Subspace<F>> left,
                                    std::vector<Subspace<F>> right) {
  DoubleSpec<F> s;
  s.q = q;
  s.N = N;
  s.leftRel = std::move(left);
  s.rightRel = std::move(right);
  if (s.leftRel.size() != N + 1 || s.rightRel.size() != N + 1)
    throw ConfigError("double: need relation spaces for every degree 0..N");
  double_fill_bases(s);
  return s;
}

// --------------------------------------------------------------- validation --

// Relation subspaces must be stable under the (dual) tensor actions.
template <class F>
CheckReport<F> check_relations_stable(const DoubleSpec<F>& spec) {
  const F& K = spec.K();
  const GModule<F> dual = module_dual(spec.q.M);
  for (std::size_t n = 1; n <= spec.N; ++n) {
    for (gid g = 0; g < spec.G().order(); ++g) {
      Matrix<F> Rn = module_tensor_power_of(spec.q.M, g, n);
      for (std::size_t i = 0; i < spec.leftRel[n].dim(); ++i)
        if (!subspace_contains(K, spec.leftRel[n],
                               mat_apply(K, Rn, mat_row(K, spec.leftRel[n].rows, i))))
          return {false, "left relations at degree " + std::to_string(n) +
                             " not stable under " + spec.G().label(g)};
      Matrix<F> Dn = module_tensor_power_of(dual, g, n);
      for (std::size_t i = 0; i < spec.rightRel[n].dim(); ++i)
        if (!subspace_contains(K, spec.rightRel[n],
                               mat_apply(K, Dn, mat_row(K, spec.rightRel[n].rows, i))))
          return {false, "right relations at degree " + std::to_string(n) +
                             " not stable under " + spec.G().label(g)};
    }
  }
  return {true, ""};
}

// Triangularity: the qb integer must map each relation slice into
// (previous slice) (x) kG (x) V, and dually on the right.  This is the exact
// criterion for U^- (x) kG (x) U^+ to be a triangular quotient.
template <class F>
CheckReport<F> check_triangular(const DoubleSpec<F>& spec) {
  const F& K = spec.K();
  const std::size_t hv = spec.G().order() * spec.d();
  for (std::size_t n = 1; n <= spec.N; ++n) {
    if (spec.leftRel[n].dim() > 0) {
      Matrix<F> T = complement_test(K, spec.leftRel[n - 1]);
      Matrix<F> B = mat_mul(K, mat_kron(K, T, mat_identity(K, hv)),
                            qb_integer(spec.q, n));
      for (std::size_t i = 0; i < spec.leftRel[n].dim(); ++i) {
        Vec<F> img = mat_apply(K, B, mat_row(K, spec.leftRel[n].rows, i));
        for (const auto& x : img)
          if (!K.is_zero(x))
            return {false, "left relations at degree " + std::to_string(n) +
                               " are not triangular"};
      }
    }
    if (spec.rightRel[n].dim() > 0) {
      Matrix<F> T = complement_test(K, spec.rightRel[n - 1]);
      Matrix<F> B = mat_mul(K, mat_kron(K, mat_identity(K, hv), T),
                            qb_integer_right(spec.q, n));
      for (std::size_t i = 0; i < spec.rightRel[n].dim(); ++i) {
        Vec<F> img = mat_apply(K, B, mat_row(K, spec.rightRel[n].rows, i));
        for (const auto& x : img)
          if (!K.is_zero(x))
            return {false, "right relations at degree " + std::to_string(n) +
                               " are not triangular"};
      }
    }
  }
  return {true, ""};
}

// ------------------------------------------------------------ normal forms --

struct GenLetter {
  enum Kind : std::uint8_t { V = 0, Grp = 1, Fstar = 2 };
  Kind kind;
  std::uint32_t idx;  // module index for V/Fstar, element id for Grp
};

using GenWord = std::vector<GenLetter>;

inline GenLetter gen_v(std::uint32_t i) { return {GenLetter::V, i}; }
inline GenLetter gen_g(gid g) { return {GenLetter::Grp, g}; }
inline GenLetter gen_f(std::uint32_t j) { return {GenLetter::Fstar, j}; }

// Key: (left word, group element, right word); value: coefficient.
using NFKey = std::tuple<std::vector<std::uint32_t>, gid, std::vector<std::uint32_t>>;

inline NFKey nf_key(std::vector<std::uint32_t> lw, gid g,
                    std::vector<std::uint32_t> rw) {
  return NFKey(std::move(lw), g, std::move(rw));
}

template <class F>
struct NormalForm {
  std::map<NFKey, typename F::Elem> terms;
};

template <class F>
void nf_add_term(const F& K, NormalForm<F>& nf, const NFKey& key,
                 const typename F::Elem& c) {
  if (K.is_zero(c)) return;
  auto it = nf.terms.find(key);
  if (it == nf.terms.end()) {
    nf.terms.emplace(key, c);
  } else {
    it->second = K.add(it->second, c);
    if (K.is_zero(it->second)) nf.terms.erase(it);
  }
}

template <class F>
NormalForm<F> nf_add(const F& K, const NormalForm<F>& a, const NormalForm<F>& b) {
  NormalForm<F> out = a;
  for (const auto& [k, c] : b.terms) nf_add_term(K, out, k, c);
  return out;
}

template <class F>
NormalForm<F> nf_scale(const F& K, const typename F::Elem& s, const NormalForm<F>& a) {
  NormalForm<F> out;
  if (K.is_zero(s)) return out;
  for (const auto& [k, c] : a.terms) out.terms.emplace(k, K.mul(s, c));
  return out;
}

template <class F>
NormalForm<F> nf_neg(const F& K, const NormalForm<F>& a) {
  return nf_scale(K, K.neg(K.one()), a);
}

template <class F>
bool nf_eq(const F& K, const NormalForm<F>& a, const NormalForm<F>& b) {
  if (a.terms.size() != b.terms.size()) return false;
  auto it = b.terms.begin();
  for (const auto& [k, c] : a.terms) {
    if (!(k == it->first) || !K.eq(c, it->second)) return false;
    ++it;
  }
  return true;
}

template <class F>
bool nf_is_zero(const NormalForm<F>& a) {
  return a.terms.empty();
}

template <class F>
std::string nf_str(const DoubleSpec<F>& spec, const NormalForm<F>& nf) {
  const F& K = spec.K();
  if (nf.terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : nf.terms) {
    const auto& [lw, g, rw] = key;
    if (!out.empty()) out += " + ";
    out += "(" + K.str(c) + ")";
    for (auto i : lw) out += "*v" + std::to_string(i + 1);
    out += "*" + spec.G().label(g);
    for (auto j : rw) out += "*f" + std::to_string(j + 1);
  }
  return out;
}

// --------------------------------------------------------- straightening ----

namespace detail {

// Reduce the separated halves of a monomial modulo the relation subspaces and
// accumulate the result.
template <class F>
void reduce_collect(const F& K, const DoubleSpec<F>& spec,
                    const std::vector<std::uint32_t>& lw, gid g,
                    const std::vector<std::uint32_t>& rw,
                    const typename F::Elem& coeff, NormalForm<F>& out) {
  const std::size_t d = spec.d();
  if (lw.size() > spec.N || rw.size() > spec.N)
    throw ComputeError("straighten: word degree exceeds truncation N=" +
                       std::to_string(spec.N));
  std::vector<std::size_t> lwz(lw.begin(), lw.end()), rwz(rw.begin(), rw.end());
  Vec<F> lv = vec_unit(K, ipow(d, lw.size()), word_index(lwz, d));
  lv = subspace_reduce(K, spec.leftRel[lw.size()], lv);
  Vec<F> rv = vec_unit(K, ipow(d, rw.size()), word_index(rwz, d));
  rv = subspace_reduce(K, spec.rightRel[rw.size()], rv);
  for (std::size_t a = 0; a < lv.size(); ++a) {
    if (K.is_zero(lv[a])) continue;
    std::vector<std::size_t> wa = index_word(a, lw.size(), d);
    for (std::size_t b = 0; b < rv.size(); ++b) {
      if (K.is_zero(rv[b])) continue;
      std::vector<std::size_t> wb = index_word(b, rw.size(), d);
      NFKey key{std::vector<std::uint32_t>(wa.begin(), wa.end()), g,
                std::vector<std::uint32_t>(wb.begin(), wb.end())};
      nf_add_term(K, out, key, K.mul(coeff, K.mul(lv[a], rv[b])));
    }
  }
}

}  // namespace detail

// Straighten a linear combination of generator words into normal form.
template <class F>
NormalForm<F> straighten(const DoubleSpec<F>& spec,
                         std::vector<std::pair<GenWord, typename F::Elem>> work) {
  const F& K = spec.K();
  const FinGroup& G = spec.G();
  NormalForm<F> out;
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (K.is_zero(c)) continue;
    // find leftmost reducible adjacent pair
    std::size_t pos = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const auto a = w[i].kind, b = w[i + 1].kind;
      if ((a == GenLetter::Grp && b == GenLetter::Grp) ||
          (a == GenLetter::Grp && b == GenLetter::V) ||
          (a == GenLetter::Fstar && b == GenLetter::V) ||
          (a == GenLetter::Fstar && b == GenLetter::Grp)) {
        pos = i;
        break;
      }
    }
    if (pos == w.size()) {
      // already segregated: V...V [g] F...F
      std::vector<std::uint32_t> lw, rw;
      gid g = 0;
      for (const auto& l : w) {
        if (l.kind == GenLetter::V) lw.push_back(l.idx);
        else if (l.kind == GenLetter::Grp) g = G.op(g, static_cast<gid>(l.idx));
        else rw.push_back(l.idx);
      }
      detail::reduce_collect(K, spec, lw, g, rw, c, out);
      continue;
    }
    const GenLetter A = w[pos], B = w[pos + 1];
    auto rest = [&](const std::vector<GenLetter>& repl) {
      GenWord nw;
      nw.reserve(w.size() + repl.size());
      nw.insert(nw.end(), w.begin(), w.begin() + pos);
      nw.insert(nw.end(), repl.begin(), repl.end());
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      return nw;
    };
    if (A.kind == GenLetter::Grp && B.kind == GenLetter::Grp) {
      work.emplace_back(rest({gen_g(G.op(A.idx, B.idx))}), c);
    } else if (A.kind == GenLetter::Grp && B.kind == GenLetter::V) {
      // g v = (g|>v) g
      const Matrix<F>& R = spec.q.M.of(A.idx);
      for (std::size_t t = 0; t < spec.d(); ++t) {
        if (K.is_zero(R.at(t, B.idx))) continue;
        work.emplace_back(rest({gen_v(static_cast<std::uint32_t>(t)), gen_g(A.idx)}),
                          K.mul(c, R.at(t, B.idx)));
      }
    } else if (A.kind == GenLetter::Fstar && B.kind == GenLetter::V) {
      // f v = v f + sum_h <f, L_h v> h
      work.emplace_back(rest({B, A}), c);
      for (const auto& [h, Lh] : spec.q.L) {
        const auto& coef = Lh.at(A.idx, B.idx);
        if (K.is_zero(coef)) continue;
        work.emplace_back(rest({gen_g(h)}), K.mul(c, coef));
      }
    } else {  // Fstar then Grp:  f g = g (f <| g)
      const Matrix<F>& R = spec.q.M.of(B.idx);
      for (std::size_t t = 0; t < spec.d(); ++t) {
        if (K.is_zero(R.at(A.idx, t))) continue;
        work.emplace_back(rest({gen_g(B.idx), gen_f(static_cast<std::uint32_t>(t))}),
                          K.mul(c, R.at(A.idx, t)));
      }
    }
  }
  return out;
}

template <class F>
NormalForm<F> nf_of_word(const DoubleSpec<F>& spec, const GenWord& w) {
  return straighten(spec, {{w, spec.K().one()}});
}

template <class F>
GenWord word_of_key(const NFKey& key) {
  GenWord w;
  const auto& [lw, g, rw] = key;
  for (auto i : lw) w.push_back(gen_v(i));
  w.push_back(gen_g(g));
  for (auto j : rw) w.push_back(gen_f(j));
  return w;
}

// Product in the double: concatenate term words pairwise and restraighten.
template <class F>
NormalForm<F> nf_mul(const DoubleSpec<F>& spec, const NormalForm<F>& x,
                     const NormalForm<F>& y) {
  const F& K = spec.K();
  std::vector<std::pair<GenWord, typename F::Elem>> work;
  for (const auto& [kx, cx] : x.terms)
    for (const auto& [ky, cy] : y.terms) {
      GenWord w = word_of_key<F>(kx);
      GenWord wy = word_of_key<F>(ky);
      w.insert(w.end(), wy.begin(), wy.end());
      work.emplace_back(std::move(w), K.mul(cx, cy));
    }
  return straighten(spec, work);
}

template <class F>
NormalForm<F> nf_commutator(const DoubleSpec<F>& spec, const NormalForm<F>& x,
                            const NormalForm<F>& y) {
  return nf_add(spec.K(), nf_mul(spec, x, y), nf_neg(spec.K(), nf_mul(spec, y, x)));
}

// Non-vacuous associativity witness: (xy)z vs x(yz) with intermediate
// reduction to normal form after the first product.
template <class F>
bool assoc_witness(const DoubleSpec<F>& spec, const GenWord& x, const GenWord& y,
                   const GenWord& z) {
  NormalForm<F> nx = nf_of_word(spec, x), ny = nf_of_word(spec, y),
                nz = nf_of_word(spec, z);
  NormalForm<F> l = nf_mul(spec, nf_mul(spec, nx, ny), nz);
  NormalForm<F> r = nf_mul(spec, nx, nf_mul(spec, ny, nz));
  NormalForm<F> diff = nf_add(spec.K(), l, nf_neg(spec.K(), r));
  return nf_is_zero(diff);
}

// ---------------------------------------------------------------- PBW ------

template <class F>
struct PBWReport {
  bool pass = true;
  std::string detail;
  // slice dimensions dim U^-_a * |G| * dim U^+_b for a+b <= N, keyed (a,b)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slice_dims;
};

// Verifies triangularity and stability of the relations, records the PBW
// slice dimensions, and runs associativity witnesses on a deterministic
// sample of generator triples.
template <class F>
PBWReport<F> pbw_check(const DoubleSpec<F>& spec, std::uint64_t seed = 0,
                       std::size_t witnesses = 24) {
  PBWReport<F> rep;
  CheckReport<F> st = check_relations_stable(spec);
  if (!st.ok) return {false, st.detail, {}};
  CheckReport<F> tri = check_triangular(spec);
  if (!tri.ok) return {false, tri.detail, {}};
  for (std::size_t a = 0; a <= spec.N; ++a)
    for (std::size_t b = 0; a + b <= spec.N; ++b)
      rep.slice_dims[{a, b}] =
          spec.leftBasis[a].size() * spec.G().order() * spec.rightBasis[b].size();
  std::mt19937_64 rng(seed);
  auto rnd_letter = [&]() -> GenLetter {
    std::uniform_int_distribution<int> kd(0, 2);
    std::uniform_int_distribution<std::uint32_t> vi(
        0, static_cast<std::uint32_t>(spec.d() - 1));
    std::uniform_int_distribution<std::uint32_t> gi(
        0, static_cast<std::uint32_t>(spec.G().order() - 1));
    switch (kd(rng)) {
      case 0: return gen_v(vi(rng));
      case 1: return gen_g(gi(rng));
      default: return gen_f(vi(rng));
    }
  };
  const std::size_t maxlen = spec.N >= 1 ? spec.N : 1;
  for (std::size_t t = 0; t < witnesses; ++t) {
    std::uniform_int_distribution<std::size_t> ld(1, std::max<std::size_t>(1, maxlen / 2));
    auto mk = [&]() {
      GenWord w;
      const std::size_t len = ld(rng);
      for (std::size_t i = 0; i < len; ++i) w.push_back(rnd_letter());
      return w;
    };
    GenWord x = mk(), y = mk(), z = mk();
    bool ok;
    try {
      ok = assoc_witness(spec, x, y, z);
    } catch (const ComputeError&) {
      continue;  // witness exceeded truncation; skip
    }
    if (!ok) {
      rep.pass = false;
      rep.detail = "associativity witness failed";
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------- minimality -----

template <class F>
struct MinimalityViolation {
  std::size_t degree = 0;
  bool left = true;  // left = lowering side acting on U^-, else on U^+
  std::vector<Vec<F>> witnesses;  // tensors killed by all commutators, not in relations
};

template <class F>
struct MinimalityReport {
  bool minimal = true;
  std::vector<MinimalityViolation<F>> violations;
};

// Degreewise test of the triangular-minimality criterion: b in U^-_n is
// annihilated by every [f, -] modulo relations iff b is a relation; dually on
// the right half.  Violations come with explicit witness tensors.
template <class F>
MinimalityReport<F> minimality_check(const DoubleSpec<F>& spec) {
  const F& K = spec.K();
  const std::size_t d = spec.d(), ng = spec.G().order();
  MinimalityReport<F> rep;
  for (std::size_t n = 1; n <= spec.N; ++n) {
    const std::size_t Dn = ipow(d, n), Dp = ipow(d, n - 1);
    {  // left side: solutions of [f_a, b] in K_{n-1} (x) kG for all a
      Matrix<F> Int = qb_integer(spec.q, n);
      Matrix<F> T = complement_test(K, spec.leftRel[n - 1]);
      Matrix<F> TI = mat_kron(K, T, mat_identity(K, ng));
      Matrix<F> sys;
      sys.cols = Dn;
      for (std::size_t a = 0; a < d; ++a) {
        Matrix<F> Ca = mat_zeros(K, Dp * ng, Dn);
        for (std::size_t r = 0; r < Dp * ng; ++r)
          for (std::size_t cidx = 0; cidx < Dn; ++cidx)
            Ca.at(r, cidx) = Int.at(r * d + a, cidx);
        sys = mat_stack_rows(K, sys, mat_mul(K, TI, Ca));
      }
      Subspace<F> sol = subspace_from_kernel(K, sys);
      if (sol.dim() > spec.leftRel[n].dim()) {
        MinimalityViolation<F> v;
        v.degree = n;
        v.left = true;
        for (std::size_t i = 0; i < sol.dim(); ++i) {
          Vec<F> cand = mat_row(K, sol.rows, i);
          if (!subspace_contains(K, spec.leftRel[n], cand))
            v.witnesses.push_back(subspace_reduce(K, spec.leftRel[n], cand));
        }
        rep.minimal = false;
        rep.violations.push_back(std::move(v));
      }
    }
    {  // right side: solutions of [phi, v_a] in kG (x) K^r_{n-1} for all a
      Matrix<F> Int = qb_integer_right(spec.q, n);
      Matrix<F> T = complement_test(K, spec.rightRel[n - 1]);
      Matrix<F> IT = mat_kron(K, mat_identity(K, ng), T);
      Matrix<F> sys;
      sys.cols = Dn;
      for (std::size_t a = 0; a < d; ++a) {
        Matrix<F> Ca = mat_zeros(K, ng * Dp, Dn);
        for (std::size_t r = 0; r < ng * Dp; ++r)
          for (std::size_t cidx = 0; cidx < Dn; ++cidx)
            Ca.at(r, cidx) = Int.at(a * ng * Dp + r, cidx);
        sys = mat_stack_rows(K, sys, mat_mul(K, IT, Ca));
      }
      Subspace<F> sol = subspace_from_kernel(K, sys);
      if (sol.dim() > spec.rightRel[n].dim()) {
        MinimalityViolation<F> v;
        v.degree = n;
        v.left = false;
        for (std::size_t i = 0; i < sol.dim(); ++i) {
          Vec<F> cand = mat_row(K, sol.rows, i);
          if (!subspace_contains(K, spec.rightRel[n], cand))
            v.witnesses.push_back(subspace_reduce(K, spec.rightRel[n], cand));
        }
        rep.minimal = false;
        rep.violations.push_back(std::move(v));
      }
    }
  }
  return rep;
}

// ------------------------------------------------------ Harish-Chandra -----

template <class F>
struct HCGram {
  std::size_t degree = 0;
  std::vector<std::size_t> rows_words, cols_words;  // U^+_n and U^-_n bases
  std::vector<Matrix<F>> by_group;  // one scalar matrix per group element
  Matrix<F> scalar;                 // counit applied entrywise
  std::size_t rank = 0;
  std::size_t left_radical = 0, right_radical = 0;
};

// Pairing (phi, b)_H = kG-component of the product phi * b in the double;
// scalar form applies the counit.  Rows run over the U^+_n basis, columns
// over U^-_n.
template <class F>
HCGram<F> hc_gram(const DoubleSpec<F>& spec, std::size_t n) {
  const F& K = spec.K();
  const std::size_t ng = spec.G().order();
  HCGram<F> out;
  out.degree = n;
  out.rows_words = spec.rightBasis[n];
  out.cols_words = spec.leftBasis[n];
  const std::size_t R = out.rows_words.size(), C = out.cols_words.size();
  out.by_group.assign(ng, mat_zeros(K, R, C));
  out.scalar = mat_zeros(K, R, C);
  for (std::size_t i = 0; i < R; ++i) {
    std::vector<std::size_t> pw = index_word(out.rows_words[i], n, spec.d());
    for (std::size_t j = 0; j < C; ++j) {
      std::vector<std::size_t> bw = index_word(out.cols_words[j], n, spec.d());
      GenWord w;
      for (std::size_t t : pw) w.push_back(gen_f(static_cast<std::uint32_t>(t)));
      for (std::size_t t : bw) w.push_back(gen_v(static_cast<std::uint32_t>(t)));
      NormalForm<F> nf = nf_of_word(spec, w);
      for (const auto& [key, c] : nf.terms) {
        const auto& [lw, g, rw] = key;
        if (lw.empty() && rw.empty()) {
          out.by_group[g].at(i, j) = K.add(out.by_group[g].at(i, j), c);
          out.scalar.at(i, j) = K.add(out.scalar.at(i, j), c);
        }
      }
    }
  }
  out.rank = mat_rank(K, out.scalar);
  out.left_radical = R - out.rank;
  out.right_radical = C - out.rank;
  return out;
}

// Independent route to the same pairing via the qb factorial:
// (phi, b)_H = (id_H (x) <phi, ->) m_H F_n(b); used as a cross-check.
template <class F>
Matrix<F> hc_gram_scalar_via_factorial(const DoubleSpec<F>& spec, std::size_t n) {
  const F& K = spec.K();
  const std::size_t d = spec.d(), ng = spec.G().order();
  Matrix<F> Fn = qb_factorial(spec.q, n);
  Matrix<F> Mh = mh_collapse(K, spec.G(), d, n);
  Matrix<F> MF = mat_mul(K, Mh, Fn);  // kG (x) V^{(x)n}  <-  V^{(x)n}
  const auto& rows = spec.rightBasis[n];
  const auto& cols = spec.leftBasis[n];
  Matrix<F> Gm = mat_zeros(K, rows.size(), cols.size());
  const std::size_t Dn = ipow(d, n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto s = K.zero();
      for (std::size_t g = 0; g < ng; ++g)
        s = K.add(s, MF.at(g * Dn + rows[i], cols[j]));
      Gm.at(i, j) = s;
    }
  return Gm;
}

// Coordinates of a normal form over the PBW slice basis of bidegree (a, b):
// (left complement word, group element, right complement word).  Throws if a
// term lies outside the slice.
template <class F>
Vec<F> nf_slice_coords(const DoubleSpec<F>& spec, const NormalForm<F>& nf,
                       std::size_t a, std::size_t b) {
  const F& K = spec.K();
  const std::size_t ng = spec.G().order();
  const auto& lb = spec.leftBasis[a];
  const auto& rb = spec.rightBasis[b];
  Vec<F> out = vec_zeros(K, lb.size() * ng * rb.size());
  auto find_pos = [](const std::vector<std::size_t>& bas, std::size_t w) {
    auto it = std::lower_bound(bas.begin(), bas.end(), w);
    if (it == bas.end() || *it != w)
      throw ComputeError("normal form term is not a complement word");
    return static_cast<std::size_t>(it - bas.begin());
  };
  for (const auto& [key, c] : nf.terms) {
    const auto& [lw, g, rw] = key;
    if (lw.size() != a || rw.size() != b)
      throw ComputeError("normal form term outside the requested bidegree");
    std::vector<std::size_t> lz(lw.begin(), lw.end()), rz(rw.begin(), rw.end());
    const std::size_t li = find_pos(lb, word_index(lz, spec.d()));
    const std::size_t ri = find_pos(rb, word_index(rz, spec.d()));
    const std::size_t idx = (li * ng + g) * rb.size() + ri;
    out[idx] = K.add(out[idx], c);
  }
  return out;
}

// -------------------------------------------------------- standard module --

template <class F>
struct StandardModule {
  std::size_t total_dim = 0;
  std::vector<std::size_t> offsets;  // per degree 0..N
  std::size_t rho_dim = 0;
  std::vector<Matrix<F>> act_v;      // one per V basis vector
  std::vector<Matrix<F>> act_f;      // one per V* basis vector
  std::vector<Matrix<F>> act_g;      // one per group element
};

// M_rho = U^- (x) rho with v acting by multiplication (truncated at N),
// g diagonally, and f by the commutator action [f, b] (x) l with the group
// factor pushed into rho.
template <class F>
StandardModule<F> standard_module(const DoubleSpec<F>& spec, const GModule<F>& rho) {
  const F& K = spec.K();
  const std::size_t d = spec.d(), ng = spec.G().order();
  StandardModule<F> out;
  out.rho_dim = rho.d;
  out.offsets.resize(spec.N + 1);
  std::size_t tot = 0;
  for (std::size_t n = 0; n <= spec.N; ++n) {
    out.offsets[n] = tot;
    tot += spec.leftBasis[n].size() * rho.d;
  }
  out.total_dim = tot;

  auto emit = [&](Matrix<F>& M, std::size_t n_to, const Vec<F>& reduced,
                  std::size_t l_to_dim_block /*row offset inside rho block*/,
                  std::size_t col, const typename F::Elem& scale) {
    // reduced lives in V^{(x)n_to}; its complement coordinates index rows
    const auto& basis = spec.leftBasis[n_to];
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
      const auto& v = reduced[basis[bi]];
      if (K.is_zero(v)) continue;
      M.at(out.offsets[n_to] + bi * rho.d + l_to_dim_block, col) =
          K.add(M.at(out.offsets[n_to] + bi * rho.d + l_to_dim_block, col),
                K.mul(scale, v));
    }
  };

  for (std::size_t i = 0; i < d; ++i) {
    Matrix<F> M = mat_zeros(K, tot, tot);
    for (std::size_t n = 0; n < spec.N; ++n) {  // top degree truncates to 0
      for (std::size_t wi = 0; wi < spec.leftBasis[n].size(); ++wi) {
        std::vector<std::size_t> w = index_word(spec.leftBasis[n][wi], n, d);
        w.insert(w.begin(), i);
        Vec<F> e = vec_unit(K, ipow(d, n + 1), word_index(w, d));
        Vec<F> red = subspace_reduce(K, spec.leftRel[n + 1], e);
        for (std::size_t l = 0; l < rho.d; ++l)
          emit(M, n + 1, red, l, out.offsets[n] + wi * rho.d + l, K.one());
      }
    }
    out.act_v.push_back(std::move(M));
  }

  for (gid g = 0; g < ng; ++g) {
    Matrix<F> M = mat_zeros(K, tot, tot);
    for (std::size_t n = 0; n <= spec.N; ++n) {
      Matrix<F> Rg = module_tensor_power_of(spec.q.M, g, n);
      for (std::size_t wi = 0; wi < spec.leftBasis[n].size(); ++wi) {
        Vec<F> img = mat_col(K, Rg, spec.leftBasis[n][wi]);
        Vec<F> red = subspace_reduce(K, spec.leftRel[n], img);
        for (std::size_t l = 0; l < rho.d; ++l)
          for (std::size_t lp = 0; lp < rho.d; ++lp) {
            const auto& rv = rho.of(g).at(lp, l);
            if (K.is_zero(rv)) continue;
            emit(M, n, red, lp, out.offsets[n] + wi * rho.d + l, rv);
          }
      }
    }
    out.act_g.push_back(std::move(M));
  }

  for (std::size_t j = 0; j < d; ++j) {
    Matrix<F> M = mat_zeros(K, tot, tot);
    for (std::size_t n = 1; n <= spec.N; ++n) {
      Matrix<F> Int = qb_integer(spec.q, n);
      const std::size_t Dp = ipow(d, n - 1);
      for (std::size_t wi = 0; wi < spec.leftBasis[n].size(); ++wi) {
        // [f_j, b_w] = sum over rows (word', h, j)
        for (std::size_t wp = 0; wp < Dp; ++wp) {
          Vec<F> red;  // lazily reduce each word'
          bool red_done = false;
          for (std::size_t h = 0; h < ng; ++h) {
            const auto& c = Int.at((wp * ng + h) * d + j, spec.leftBasis[n][wi]);
            if (K.is_zero(c)) continue;
            if (!red_done) {
              red = subspace_reduce(K, spec.leftRel[n - 1],
                                    vec_unit(K, Dp, wp));
              red_done = true;
            }
            for (std::size_t l = 0; l < rho.d; ++l)
              for (std::size_t lp = 0; lp < rho.d; ++lp) {
                const auto& rv = rho.of(static_cast<gid>(h)).at(lp, l);
                if (K.is_zero(rv)) continue;
                emit(M, n - 1, red, lp, out.offsets[n] + wi * rho.d + l,
                     K.mul(c, rv));
              }
          }
        }
      }
    }
    out.act_f.push_back(std::move(M));
  }
  return out;
}

// Module axiom audit on the subspace of degrees <= N-1 (where truncation
// cannot interfere): group homomorphism property, the semidirect relation
// g v g^{-1} = g(v), and [f_j, v_i] = sum_h <f_j, L_h v_i> h.
template <class F>
CheckReport<F> standard_module_check(const DoubleSpec<F>& spec,
                                     const GModule<F>& rho,
                                     const StandardModule<F>& sm) {
  const F& K = spec.K();
  const std::size_t ng = spec.G().order(), d = spec.d();
  const std::size_t cut =
      spec.N >= 1 ? sm.offsets[spec.N] : sm.total_dim;  // cols of degree <= N-1
  auto eq_on_low = [&](const Matrix<F>& A, const Matrix<F>& B) {
    for (std::size_t i = 0; i < cut; ++i)
      for (std::size_t jj = 0; jj < cut; ++jj)
        if (!K.eq(A.at(i, jj), B.at(i, jj))) return false;
    return true;
  };
  for (gid a = 0; a < ng; ++a)
    for (gid b = 0; b < ng; ++b)
      if (!eq_on_low(mat_mul(K, sm.act_g[a], sm.act_g[b]), sm.act_g[spec.G().op(a, b)]))
        return {false, "standard module: group action is not a homomorphism"};
  for (gid a = 0; a < ng; ++a)
    for (std::size_t i = 0; i < d; ++i) {
      Matrix<F> lhs = mat_mul(K, sm.act_g[a], sm.act_v[i]);
      Matrix<F> rhs = mat_zeros(K, sm.total_dim, sm.total_dim);
      for (std::size_t t = 0; t < d; ++t) {
        const auto& cv = spec.q.M.of(a).at(t, i);
        if (K.is_zero(cv)) continue;
        rhs = mat_add(K, rhs, mat_scale(K, cv, mat_mul(K, sm.act_v[t], sm.act_g[a])));
      }
      if (!eq_on_low(lhs, rhs))
        return {false, "standard module: g v != g(v) g on the module"};
    }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      Matrix<F> lhs = mat_sub(K, mat_mul(K, sm.act_f[j], sm.act_v[i]),
                              mat_mul(K, sm.act_v[i], sm.act_f[j]));
      Matrix<F> rhs = mat_zeros(K, sm.total_dim, sm.total_dim);
      GAVec<F> beta = qyd_beta(spec.q, j, i);
      for (gid h = 0; h < ng; ++h) {
        if (K.is_zero(beta[h])) continue;
        rhs = mat_add(K, rhs, mat_scale(K, beta[h], sm.act_g[h]));
      }
      if (!eq_on_low(lhs, rhs))
        return {false, "standard module: [f, v] != beta(f, v)"};
    }
  return {true, ""};
}

}  // namespace bd
