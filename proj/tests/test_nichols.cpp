#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "bd/builtin.hpp"
#include "bd/cherednik.hpp"
#include "helpers.hpp"

using namespace bd;

TEST_CASE("hilbert functions of +-tau in three variables") {
  RatField K;
  Matrix<RatField> tau = tau_matrix(K, 3);
  CHECK(braided_hilbert(K, tau, 3, 4) ==
        std::vector<std::size_t>{1, 3, 6, 10, 15});
  Matrix<RatField> mt = mat_scale(K, K.neg(K.one()), tau);
  CHECK(braided_hilbert(K, mt, 3, 4) ==
        std::vector<std::size_t>{1, 3, 3, 1, 0});

  FpField K5(5);
  Matrix<FpField> tau5 = tau_matrix(K5, 3);
  CHECK(braided_hilbert(K5, tau5, 3, 4) ==
        std::vector<std::size_t>{1, 3, 6, 10, 15});
  Matrix<FpField> mt5 = mat_scale(K5, K5.neg(K5.one()), tau5);
  CHECK(braided_hilbert(K5, mt5, 3, 4) ==
        std::vector<std::size_t>{1, 3, 3, 1, 0});
}

TEST_CASE("quantum line at q = 2 over GF(7)") {
  FpField K(7);
  ExampleBundle<FpField> b = qline_example(K, 3, K.from_long(2));
  Matrix<FpField> Psi = yd_braiding(*b.yd);
  REQUIRE(Psi.rows == 1);
  CHECK(K.eq(Psi.at(0, 0), K.from_long(2)));
  // [1]! = 1, [2]! = 3, [3]! = (1+2)(1+2+4) = 0: dims 1,1,1,0,0
  CHECK(braided_hilbert(K, Psi, 1, 4) ==
        std::vector<std::size_t>{1, 1, 1, 0, 0});
  CHECK(nichols_quotient(b.q, 4).dims() ==
        std::vector<std::size_t>{1, 1, 1, 0, 0});
}

TEST_CASE("transposition quotient of S3") {
  RatField K;
  ExampleBundle<RatField> fk = transposition_example(K, 3);
  GradedQuotient<RatField> gq = nichols_quotient(fk.q, 5);
  std::vector<std::size_t> dims = gq.dims();
  CHECK(dims == std::vector<std::size_t>{1, 3, 4, 3, 1, 0});
  CHECK(std::accumulate(dims.begin(), dims.end(), std::size_t{0}) == 12);

  // the symmetrizer route computes the same hilbert function
  Matrix<RatField> Psi = yd_braiding(*fk.yd);
  CHECK(woronowicz_hilbert(K, Psi, 3, 4) == braided_hilbert(K, Psi, 3, 4));
}

TEST_CASE("quadratic relations of the transposition module, pinned") {
  RatField K;
  ExampleBundle<RatField> fk = transposition_example(K, 3);
  GradedQuotient<RatField> gq = nichols_quotient(fk.q, 2);
  // basis order by group id: x1 = [12], x2 = [23], x3 = [13]
  // relations: three squares and two sign-twisted cyclics
  Matrix<RatField> rows = mat_zeros(K, 5, 9);
  rows.at(0, 0) = K.one();                  // x1 x1
  rows.at(1, 4) = K.one();                  // x2 x2
  rows.at(2, 8) = K.one();                  // x3 x3
  rows.at(3, 1) = K.neg(K.one());           // -x1x2 + x2x3 + x3x1
  rows.at(3, 5) = K.one();
  rows.at(3, 6) = K.one();
  rows.at(4, 3) = K.neg(K.one());           // -x2x1 + x1x3 + x3x2
  rows.at(4, 2) = K.one();
  rows.at(4, 7) = K.one();
  CHECK(subspace_eq(K, gq.rel[2], subspace_from_rows(K, rows)));

  // same facts multiplicatively: squares die, products reduce onto the
  // complement words x2x1, x2x3, x3x1, x3x2
  for (std::size_t i = 0; i < 3; ++i) CHECK(gq_mul(gq, 1, i, 1, i).empty());
  auto p01 = gq_mul(gq, 1, 0, 1, 1);  // x1 x2 = x2x3 + x3x1
  REQUIRE(p01.size() == 2);
  CHECK(K.eq(p01.at(1), K.one()));
  CHECK(K.eq(p01.at(2), K.one()));
  auto p10 = gq_mul(gq, 1, 1, 1, 0);  // x2 x1 is itself a basis word
  REQUIRE(p10.size() == 1);
  CHECK(K.eq(p10.at(0), K.one()));
  auto p02 = gq_mul(gq, 1, 0, 1, 2);  // x1 x3 = x2x1 - x3x2
  REQUIRE(p02.size() == 2);
  CHECK(K.eq(p02.at(0), K.one()));
  CHECK(K.eq(p02.at(3), K.neg(K.one())));

  CHECK_THROWS_AS(gq_mul(gq, 1, 0, 2, 0), ComputeError);
}

TEST_CASE("plain conjugation without the sign twist has no quadratic kernel") {
  RatField K;
  ExampleBundle<RatField> plain = transposition_example(K, 3, false);
  Matrix<RatField> Psi = yd_braiding(*plain.yd);
  Matrix<RatField> A = mat_add(K, mat_identity(K, 9), Psi);
  CHECK(kernel_basis(K, A).cols == 0);
  CHECK(braid_eq_check(K, Psi, 3));
}

TEST_CASE("quadratic tau-cover of the transposition braiding") {
  RatField K;
  ExampleBundle<RatField> fk = transposition_example(K, 3);
  Matrix<RatField> Psi = yd_braiding(*fk.yd);
  Subspace<RatField> r2 = quad_tau_relations(K, Psi, 3);
  CHECK(r2.dim() == 1);
  GradedQuotient<RatField> cover =
      graded_quotient(K, 3, ideal_slices(K, 3, {{2, r2}}, 3));
  CHECK(cover.dims() == std::vector<std::size_t>{1, 3, 8, 21});
}

TEST_CASE("exterior algebra smash product") {
  RatField K;
  FinGroup C2 = FinGroup::cyclic(2);
  ExteriorSmashReport<RatField> rep = exterior_smash_report(K, C2, 2);
  CHECK(rep.pass);
  CHECK(rep.nichols_dims == std::vector<std::size_t>{1, 2, 1, 0});
  CHECK(rep.smash_dim == 8);
  CHECK(rep.omega_central);
  CHECK(rep.omega_square_zero);
  CHECK(rep.delta_multiplicative);

  // one dimension up: Lambda(k^3) # kC2 has dimension 2^3 * 2 = 16
  ExteriorSmashReport<RatField> r3 = exterior_smash_report(K, C2, 3);
  CHECK(r3.pass);
  CHECK(r3.nichols_dims == std::vector<std::size_t>{1, 3, 3, 1, 0});
  CHECK(r3.smash_dim == 16);
}

TEST_CASE("smash product multiplication table entries") {
  RatField K;
  ExampleBundle<RatField> ext = exterior_example(K, 2);
  GradedQuotient<RatField> gq = nichols_quotient(ext.q, 3);
  SmashAlgebra<RatField> A = smash_algebra(gq, *ext.yd);
  const gid e = 0, s = 1;
  // (v1, e)(v1, e) = 0
  SmashElem<RatField> v1{{A.index(1, 0, e), K.one()}};
  CHECK(smash_mul(A, v1, v1).empty());
  // (1, s)(v1, e) = (s . v1, s) = -(v1, s)
  SmashElem<RatField> gs{{A.index(0, 0, s), K.one()}};
  SmashElem<RatField> got = smash_mul(A, gs, v1);
  SmashElem<RatField> want{{A.index(1, 0, s), K.neg(K.one())}};
  CHECK(smash_eq(K, got, want));
  // group-likes are not central, the volume form is
  CHECK_FALSE(smash_is_central(A, gs));
}

TEST_CASE("yd transpositions act by the positivity cocycle") {
  RatField K;
  FinGroup G = FinGroup::symmetric(4);
  YDModule<RatField> yd = yd_transpositions(K, G);
  REQUIRE(yd.d() == 6);
  // every transposition flips its own pair: lambda(s, s) = -1
  for (const auto& [g, P] : yd.P) {
    if (mat_is_zero(K, P)) continue;
    for (std::size_t i = 0; i < 6; ++i)
      if (!K.is_zero(P.at(i, i)))
        CHECK(K.eq(yd.M.of(g).at(i, i), K.neg(K.one())));
  }
  CHECK(yd_check(yd).ok);
}
