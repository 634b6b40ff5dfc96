// Acceptance gate: one line per criterion, exact arithmetic throughout,
// exit 0 iff every criterion passes.

#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "property_suite.hpp"

namespace {

using namespace bd;

NFKey key(std::initializer_list<std::uint32_t> l, gid g,
          std::initializer_list<std::uint32_t> r) {
  return NFKey{std::vector<std::uint32_t>(l), g, std::vector<std::uint32_t>(r)};
}

// 1. Graded dimensions of the +-flip and --flip braidings in three variables.
template <class F>
bool flip_dims(const F& K) {
  Matrix<F> t = tau_matrix(K, 3);
  Matrix<F> mt = mat_scale(K, K.neg(K.one()), t);
  return braided_hilbert(K, t, 3, 4) ==
             std::vector<std::size_t>({1, 3, 6, 10, 15}) &&
         braided_hilbert(K, mt, 3, 4) ==
             std::vector<std::size_t>({1, 3, 3, 1, 0});
}

bool criterion_1() { return flip_dims(RatField()) && flip_dims(FpField(5)); }

// 2. Quantum line over GF(7) at q = 2: factorial scalars 1, 3, 0.
bool criterion_2() {
  FpField K(7);
  auto b = qline_example(K, 3, K.from_long(2));
  Matrix<FpField> Psi = yd_braiding(*b.yd);
  bool ok = K.eq(braided_factorial(K, Psi, 1, 1).at(0, 0), K.from_long(1));
  ok = ok && K.eq(braided_factorial(K, Psi, 1, 2).at(0, 0), K.from_long(3));
  ok = ok && K.eq(braided_factorial(K, Psi, 1, 3).at(0, 0), K.from_long(0));
  ok = ok && nichols_quotient(b.q, 3).dims() ==
                 std::vector<std::size_t>({1, 1, 1, 0});
  return ok;
}

// 3. Transposition quotient of S3: dims (1,3,4,3,1,0), total 12, and the
//    product-form factorial equals the symmetrizer sum entrywise for n <= 4.
bool criterion_3() {
  RatField K;
  auto fk = transposition_example(K, 3, true);
  Matrix<RatField> Psi = yd_braiding(*fk.yd);
  std::vector<std::size_t> dims = nichols_quotient(fk.q, 5).dims();
  bool ok = dims == std::vector<std::size_t>({1, 3, 4, 3, 1, 0});
  ok = ok && std::accumulate(dims.begin(), dims.end(), std::size_t(0)) == 12;
  for (std::size_t n = 1; n <= 4 && ok; ++n)
    ok = mat_eq(K, braided_factorial(K, Psi, 3, n),
                woronowicz_symmetrizer(K, Psi, 3, n, 5));
  return ok;
}

// 4. Pathological example: one-sided collapse and the pinned factorial.
bool criterion_4() {
  RatField K;
  auto b = pathological_example(K);
  DoubleSpec<RatField> spec = minimal_double(b.q, 4);
  bool ok = spec.leftRel[1].dim() == 0;
  ok = ok && spec.rightRel[1].dim() == 1;
  Vec<RatField> f2 = vec_zeros(K, 2);
  f2[1] = K.one();
  ok = ok && subspace_contains(K, spec.rightRel[1], f2);
  std::vector<std::size_t> rdims;
  for (std::size_t n = 0; n <= 4; ++n) rdims.push_back(spec.rightBasis[n].size());
  ok = ok && rdims == std::vector<std::size_t>({1, 1, 1, 1, 1});
  Matrix<RatField> F2 = qb_factorial(b.q, 2);
  ok = ok && F2.rows == 16 && F2.cols == 4;
  for (std::size_t r = 0; r < 16 && ok; ++r) {
    auto c1 = (r == 2 || r == 8) ? K.one() : K.zero();
    auto c2 = r == 8 ? K.one() : (r == 2 ? K.neg(K.one()) : K.zero());
    ok = K.eq(F2.at(r, 1), c1) && K.eq(F2.at(r, 2), c2);
  }
  return ok;
}

// 5. Cherednik PBW slices (a+1) * 6 * (b+1) for a+b <= 4 over Q, GF(5), GF(3).
template <class F>
bool pbw_slices(const F& K) {
  FinGroup G = FinGroup::symmetric(3);
  GModule<F> M = module_reflection(K, G);
  // c = 1 on the transposition class; the 3-cycle class becomes rank one in
  // characteristic 3 and is pinned to zero so every field sees the same data.
  ReflectionParams<F> c(M, {{gid(1), K.one()}, {gid(3), K.zero()}});
  DoubleSpec<F> spec = cherednik_double(M, K.one(), c, 4);
  if (!cherednik_pbw_dims(spec).ok) return false;
  PBWReport<F> rep = pbw_check(spec);
  if (!rep.pass) return false;
  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t b = 0; a + b <= 4; ++b)
      if (rep.slice_dims.at({a, b}) != (a + 1) * 6 * (b + 1)) return false;
  return true;
}

bool criterion_5() {
  return pbw_slices(RatField()) && pbw_slices(FpField(5)) &&
         pbw_slices(FpField(3));
}

// 6. Commutator closed form [f_j, v_i] = sum_h L_h(j,i) h on S3 and C4, and
//    dual-path agreement of the Dunkl formula for monomials of degree <= 3.
bool criterion_6() {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> M = module_reflection(K, G);
  ReflectionParams<RatField> c1 = constant_params(M, K.one());
  QYD<RatField> q = cherednik_qyd(M, K.one(), c1);
  DoubleSpec<RatField> spec = cherednik_double(M, K.one(), c1, 3);
  bool ok = true;
  for (std::uint32_t j = 0; j < 2 && ok; ++j)
    for (std::uint32_t i = 0; i < 2 && ok; ++i) {
      NormalForm<RatField> fj, vi;
      nf_add_term(K, fj, key({}, 0, {j}), K.one());
      nf_add_term(K, vi, key({i}, 0, {}), K.one());
      NormalForm<RatField> want;
      for (const auto& [h, Lh] : q.L)
        nf_add_term(K, want, key({}, h, {}), Lh.at(j, i));
      ok = nf_eq(K, nf_commutator(spec, fj, vi), want);
    }
  ok = ok && dunkl_check(M, K.one(), c1, 3).ok;

  FpField K5(5);
  FinGroup C4 = FinGroup::cyclic(4);
  GModule<FpField> W = module_character(
      K5, C4, {K5.one(), K5.from_long(2), K5.from_long(4), K5.from_long(3)});
  ReflectionParams<FpField> cw(W, {{gid(1), K5.from_long(1)},
                                   {gid(2), K5.from_long(3)},
                                   {gid(3), K5.from_long(2)}});
  QYD<FpField> qw = cherednik_qyd(W, K5.from_long(2), cw);
  DoubleSpec<FpField> specw = cherednik_double(W, K5.from_long(2), cw, 3);
  NormalForm<FpField> f0, v0;
  nf_add_term(K5, f0, key({}, 0, {0}), K5.one());
  nf_add_term(K5, v0, key({0}, 0, {}), K5.one());
  // [f, v] = t e + sum_s c_s (1 - chi(s)) s = 2e + 4g + g^2 + g^3
  NormalForm<FpField> want;
  nf_add_term(K5, want, key({}, 0, {}), K5.from_long(2));
  nf_add_term(K5, want, key({}, 1, {}), K5.from_long(4));
  nf_add_term(K5, want, key({}, 2, {}), K5.from_long(1));
  nf_add_term(K5, want, key({}, 3, {}), K5.from_long(1));
  ok = ok && nf_eq(K5, nf_commutator(specw, f0, v0), want);
  NormalForm<FpField> derived;
  for (const auto& [h, Lh] : qw.L)
    nf_add_term(K5, derived, key({}, h, {}), Lh.at(0, 0));
  ok = ok && nf_eq(K5, want, derived);
  ok = ok && dunkl_check(W, K5.from_long(2), cw, 3).ok;
  return ok;
}

// 7. Minimality over Q to degree 4; a degree-3 violation over GF(3); the
//    restricted double minimal to degree 3.
bool criterion_7() {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> M = module_reflection(K, G);
  ReflectionParams<RatField> c1 = constant_params(M, K.one());
  MinimalityReport<RatField> mq =
      minimality_check(cherednik_double(M, K.one(), c1, 4));
  bool ok = mq.minimal && mq.violations.empty();

  FpField K3(3);
  GModule<FpField> M3 = module_reflection(K3, G);
  ReflectionParams<FpField> c3(M3, {{gid(1), K3.one()}, {gid(3), K3.zero()}});
  MinimalityReport<FpField> m3 =
      minimality_check(cherednik_double(M3, K3.one(), c3, 3));
  ok = ok && !m3.minimal && !m3.violations.empty();
  for (const auto& v : m3.violations) ok = ok && v.degree == 3;

  MinimalityReport<RatField> mr =
      minimality_check(restricted_cherednik_double(M, c1, 3));
  ok = ok && mr.minimal;
  return ok;
}

// 8. Coinvariant dims (1,2,2,1), total 6 = |S3|; restricted total 216.
bool criterion_8() {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> M = module_reflection(K, G);
  ReflectionParams<RatField> c1 = constant_params(M, K.one());
  RestrictedReport<RatField> rep = restricted_dims(M, c1, 4);
  bool ok = rep.coinv_dims == std::vector<std::size_t>({1, 2, 2, 1, 0});
  ok = ok && rep.coinv_dual == rep.coinv_dims;
  std::size_t tot =
      std::accumulate(rep.coinv_dims.begin(), rep.coinv_dims.end(), std::size_t(0));
  ok = ok && tot == G.order();
  ok = ok && rep.complete && rep.total_dim == 216;
  return ok;
}

// 9. Scalar Harish-Chandra Gram nondegenerate in degrees <= 3 for the S3
//    transposition double, cross-checked through the factorial route; the
//    nilpotent pairing reproduces n! a^n.
bool criterion_9() {
  RatField K;
  auto fk = transposition_example(K, 3, true);
  DoubleSpec<RatField> spec = minimal_double(fk.q, 3);
  bool ok = true;
  for (std::size_t n = 1; n <= 3 && ok; ++n) {
    HCGram<RatField> g = hc_gram(spec, n);
    ok = g.rank == spec.leftBasis[n].size() &&
         g.rank == spec.rightBasis[n].size() && g.left_radical == 0 &&
         g.right_radical == 0 &&
         mat_eq(K, g.scalar, hc_gram_scalar_via_factorial(spec, n));
  }
  std::vector<long> fact{1, 1, 2, 6, 24};
  auto np5 = nilpotent_pairing(K, 4, 5);
  auto np2 = nilpotent_pairing(K, 4, 2);
  ok = ok && np5.size() == 5 && np2.size() == 5;
  for (std::size_t n = 0; n <= 4 && ok; ++n) {
    ok = K.eq(np5[n], K.from_long(fact[n]));
    ok = ok && K.eq(np2[n], n < 2 ? K.from_long(fact[n]) : K.zero());
  }
  return ok;
}

// 10. Exterior smash product: dimension 8, omega central of square zero,
//     comultiplication multiplicative on the relations.
bool criterion_10() {
  RatField K;
  FinGroup C2 = FinGroup::cyclic(2);
  ExteriorSmashReport<RatField> rep = exterior_smash_report(K, C2, 2);
  return rep.pass && rep.smash_dim == 8 && rep.omega_central &&
         rep.omega_square_zero && rep.delta_multiplicative &&
         rep.nichols_dims == std::vector<std::size_t>({1, 2, 1, 0});
}

// 11. Embedding into the conjugation double at t = 0 and t = 1 (t' = 1/3),
//     all three sub-checks on degrees <= 3.
bool criterion_11() {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> M = module_reflection(K, G);
  ReflectionParams<RatField> c1 = constant_params(M, K.one());
  EmbedReport<RatField> r0 = embed_check(M, K.zero(), c1, 3);
  bool ok = r0.pass && !r0.degenerate && r0.relations_ok && r0.commutators_ok &&
            r0.injective;
  EmbedReport<RatField> r1 = embed_check(M, K.one(), c1, 3);
  ok = ok && r1.pass && !r1.degenerate && r1.relations_ok && r1.commutators_ok &&
       r1.injective;
  ok = ok && K.eq(r1.t_prime, K.div(K.one(), K.from_long(3)));
  return ok;
}

// 12. Property suite across the builtin examples.
bool criterion_12() {
  for (const PropertyResult& r : run_property_suite(20260816))
    if (!r.pass) return false;
  return true;
}

}  // namespace

int main() {
  struct Entry {
    int num;
    const char* name;
    std::function<bool()> body;
  };
  const std::vector<Entry> entries{
      {1, "plus/minus flip graded dimensions over Q and GF(5)", criterion_1},
      {2, "quantum line factorial scalars over GF(7)", criterion_2},
      {3, "transposition quotient dims and symmetrizer cross-check", criterion_3},
      {4, "pathological example pinned values", criterion_4},
      {5, "Cherednik PBW slices over Q, GF(5), GF(3)", criterion_5},
      {6, "Dunkl commutator closed form on S3 and C4", criterion_6},
      {7, "minimality over Q, GF(3) violation, restricted minimality", criterion_7},
      {8, "coinvariant dims and restricted total dimension", criterion_8},
      {9, "Harish-Chandra Gram rank and nilpotent pairing", criterion_9},
      {10, "exterior smash product volume element", criterion_10},
      {11, "embedding into the conjugation double", criterion_11},
      {12, "property suite", criterion_12},
  };
  int passed = 0;
  for (const Entry& e : entries) {
    bool ok = false;
    std::string err;
    try {
      ok = e.body();
    } catch (const std::exception& ex) {
      err = std::string(" (") + ex.what() + ")";
    }
    std::printf("%s criterion %2d: %s%s\n", ok ? "pass" : "FAIL", e.num, e.name,
                err.c_str());
    if (ok) ++passed;
  }
  std::printf("acceptance: %d/12 criteria passed\n", passed);
  return passed == 12 ? 0 : 1;
}
