#include <catch2/catch_amalgamated.hpp>

#include "bd/builtin.hpp"
#include "bd/cherednik.hpp"
#include "bd/qyd.hpp"
#include "helpers.hpp"

using namespace bd;
using bdtest::mat_of;

TEST_CASE("quasicoaction axioms") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> V = module_reflection(K, G);

  // delta = 0 is always equivariant
  QYD<RatField> zero;
  zero.M = V;
  CHECK(qyd_check(zero).ok);

  // the Cherednik quasicoaction at t = 1, c = 1
  QYD<RatField> q = cherednik_qyd(V, K.one(), constant_params(V, K.one()));
  CHECK(qyd_check(q).ok);

  // perturbing one parameter inside a conjugacy class breaks equivariance
  QYD<RatField> bad = q;
  bad.L.at(1) = mat_scale(K, K.from_long(2), bad.L.at(1));
  CHECK_FALSE(qyd_check(bad).ok);
}

TEST_CASE("pathological example data") {
  RatField K;
  ExampleBundle<RatField> b = pathological_example(K);
  CHECK(qyd_check(b.q).ok);

  // beta(f1, v1) = 1, beta(f1, v2) = s, beta(f2, -) = 0
  GAVec<RatField> b11 = qyd_beta(b.q, 0, 0);
  CHECK(K.eq(b11[0], K.one()));
  CHECK(K.is_zero(b11[1]));
  GAVec<RatField> b12 = qyd_beta(b.q, 0, 1);
  CHECK(K.is_zero(b12[0]));
  CHECK(K.eq(b12[1], K.one()));
  for (std::size_t i = 0; i < 2; ++i) {
    GAVec<RatField> b2 = qyd_beta(b.q, 1, i);
    CHECK(K.is_zero(b2[0]));
    CHECK(K.is_zero(b2[1]));
  }

  // delta_r(f1) = f1 (x) 1 + f2 (x) s, delta_r(f2) = 0
  Matrix<RatField> Dr = delta_right_matrix(b.q);
  REQUIRE(Dr.rows == 4);
  CHECK(K.eq(Dr.at(0, 0), K.one()));  // f1 (x) e
  CHECK(K.eq(Dr.at(3, 0), K.one()));  // f2 (x) s
  CHECK(K.is_zero(Dr.at(1, 0)));
  CHECK(K.is_zero(Dr.at(2, 0)));
  for (std::size_t r = 0; r < 4; ++r) CHECK(K.is_zero(Dr.at(r, 1)));
}

TEST_CASE("beta concentrated on a non-central element is not equivariant") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> T = module_trivial(K, G);
  QYD<RatField> q;
  q.M = T;
  q.L.emplace(G.by_label("(1 2)"), mat_identity(K, 1));
  CHECK_FALSE(qyd_check(q).ok);
}

TEST_CASE("one-dimensional classification") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);

  std::vector<RatField::Elem> triv(G.order(), K.one());
  GAVec<RatField> p = ga_of(K, G, 0);
  OneDimReport<RatField> r1 = classify_one_dim(K, G, triv, p);
  CHECK(r1.is_qyd);
  CHECK(r1.is_genuine_yd);

  // sign character with the transposition class sum: central, not grouplike
  GModule<RatField> sg = module_sign(K, G);
  std::vector<RatField::Elem> sgn;
  for (gid g = 0; g < G.order(); ++g) sgn.push_back(sg.of(g).at(0, 0));
  GAVec<RatField> csum = ga_zero(K, G);
  for (gid g = 0; g < G.order(); ++g)
    if (g != 0 && G.op(g, g) == 0) csum[g] = K.one();
  OneDimReport<RatField> r2 = classify_one_dim(K, G, sgn, csum);
  CHECK(r2.character_ok);
  CHECK(r2.central_ok);
  CHECK(r2.is_qyd);
  CHECK_FALSE(r2.is_genuine_yd);

  // a single transposition is not central
  GAVec<RatField> one = ga_of(K, G, G.by_label("(1 2)"));
  OneDimReport<RatField> r3 = classify_one_dim(K, G, sgn, one);
  CHECK_FALSE(r3.central_ok);
  CHECK_FALSE(r3.is_qyd);
}

TEST_CASE("yd axioms and the braiding of a q-line") {
  FpField K(7);
  ExampleBundle<FpField> b = qline_example(K, 3, K.from_long(2));
  REQUIRE(b.yd.has_value());
  CHECK(yd_check(*b.yd).ok);
  Matrix<FpField> Psi = yd_braiding(*b.yd);
  REQUIRE(Psi.rows == 1);
  CHECK(K.eq(Psi.at(0, 0), K.from_long(2)));

  // trivial grading gives the flip
  FinGroup C2 = FinGroup::cyclic(2);
  YDModule<FpField> t;
  t.M = module_trivial(K, C2, 2);
  t.P.emplace(0, mat_identity(K, 2));
  CHECK(yd_check(t).ok);
  CHECK(mat_eq(K, yd_braiding(t), tau_matrix(K, 2)));
}

TEST_CASE("misplaced grading fails the yd checker") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  YDModule<RatField> y;
  y.M = module_trivial(K, G);
  y.P.emplace(G.by_label("(1 2)"), mat_identity(K, 1));
  CHECK_FALSE(yd_check(y).ok);
}

TEST_CASE("yd structures are quasicoactions with projector coefficients") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  YDModule<RatField> y = yd_transpositions(K, G);
  CHECK(yd_check(y).ok);
  QYD<RatField> q = qyd_from_yd(y);
  CHECK(qyd_check(q).ok);
  for (const auto& [h, Lh] : q.L) CHECK(mat_eq(K, Lh, y.P_of(h)));

  YDModule<RatField> yd = yd_dual(y);
  CHECK(yd_check(yd).ok);
}

TEST_CASE("universal envelope of a one-dimensional quasicoaction") {
  RatField K;
  FinGroup C2 = FinGroup::cyclic(2);
  GModule<RatField> V = module_trivial(K, C2, 1);
  QYD<RatField> q;
  q.M = V;
  q.L.emplace(1, mat_identity(K, 1));  // delta(v) = s (x) v
  PerfectPair<RatField> pp = build_YV(q);
  CHECK(pp.yd.M.d == 2);
  CHECK(mat_rank(K, pp.yd.P_of(0)) == 1);
  CHECK(mat_rank(K, pp.yd.P_of(1)) == 1);
  CHECK(perfect_pair_check(q, pp).ok);
}

TEST_CASE("perfect pair audit for the Cherednik quasicoaction") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> V = module_reflection(K, G);
  QYD<RatField> q = cherednik_qyd(V, K.one(), constant_params(V, K.one()));
  PerfectPair<RatField> pp = build_YV(q);
  CHECK(yd_check(pp.yd).ok);
  CHECK(perfect_pair_check(q, pp).ok);

  // nu o mu equals sum_h L_h by construction; check against the raw sum
  Matrix<RatField> numu = mat_mul(K, pp.nu, pp.mu);
  Matrix<RatField> sum = mat_zeros(K, 2, 2);
  for (const auto& [h, Lh] : q.L) sum = mat_add(K, sum, Lh);
  CHECK(mat_eq(K, numu, sum));
}

TEST_CASE("induction along a zero presentation is zero") {
  RatField K;
  FinGroup C2 = FinGroup::cyclic(2);
  GModule<RatField> V = module_trivial(K, C2, 1);
  QYD<RatField> q;
  q.M = V;
  q.L.emplace(1, mat_identity(K, 1));
  PerfectPair<RatField> pp = build_YV(q);
  QYD<RatField> w = qyd_from_yd(pp.yd);
  Matrix<RatField> zmu = mat_zeros(K, pp.mu.rows, pp.mu.cols);
  QYD<RatField> ind = induce_qyd(w, V, zmu, pp.nu);
  CHECK(ind.L.empty());
}

TEST_CASE("mixtures of quasicoactions") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> V = module_reflection(K, G);
  QYD<RatField> q = cherednik_qyd(V, K.one(), constant_params(V, K.one()));

  QYD<RatField> same = qyd_mix<RatField>({{K.one(), &q}});
  for (gid h = 0; h < G.order(); ++h)
    CHECK(mat_eq(K, same.L_of(h), q.L_of(h)));

  // adding lambda times the trivial quasicoaction shifts L_e by lambda id
  QYD<RatField> triv = qyd_trivial(V, K.one());
  QYD<RatField> mixed = qyd_mix<RatField>({{K.one(), &q}, {K.from_long(5), &triv}});
  Matrix<RatField> want =
      mat_add(K, q.L_of(0), mat_scale(K, K.from_long(5), mat_identity(K, 2)));
  CHECK(mat_eq(K, mixed.L_of(0), want));
  CHECK(qyd_check(mixed).ok);

  // zero coefficients give the zero structure
  QYD<RatField> none = qyd_mix<RatField>({{K.zero(), &q}, {K.zero(), &triv}});
  CHECK(none.L.empty());
}

TEST_CASE("group algebra helpers") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GAVec<RatField> a = ga_of(K, G, G.by_label("(1 2)"));
  GAVec<RatField> bb = ga_of(K, G, G.by_label("(2 3)"));
  GAVec<RatField> ab = ga_mul(K, G, a, bb);
  gid prod = G.op(G.by_label("(1 2)"), G.by_label("(2 3)"));
  for (gid g = 0; g < G.order(); ++g)
    CHECK(K.eq(ab[g], g == prod ? K.one() : K.zero()));
  CHECK(K.eq(ga_eps(K, ab), K.one()));

  GAVec<RatField> csum = ga_zero(K, G);
  for (gid g = 0; g < G.order(); ++g)
    if (g != 0 && G.op(g, g) == 0) csum[g] = K.one();
  CHECK(ga_is_class_constant(K, G, csum));
  CHECK_FALSE(ga_is_class_constant(K, G, a));
}
