#include <catch2/catch_amalgamated.hpp>

#include "bd/field.hpp"
#include "bd/matrix.hpp"
#include "bd/qyd.hpp"
#include "helpers.hpp"

using namespace bd;
using bdtest::mat_of;
using bdtest::vec_of;

TEST_CASE("rational field arithmetic and parsing") {
  RatField K;
  auto half = K.parse("1/2");
  REQUIRE(half.has_value());
  CHECK(K.eq(K.add(*half, *half), K.one()));
  CHECK(K.str(K.div(K.from_long(-2), K.from_long(6))) == "-1/3");
  CHECK_FALSE(K.parse("1/0").has_value());
  CHECK_FALSE(K.parse("x").has_value());
  CHECK_THROWS(K.div(K.one(), K.zero()));
}

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime_u64(7));
  CHECK(is_prime_u64(2147483659ull));
  CHECK_FALSE(is_prime_u64(2147483649ull));
  CHECK_THROWS(FpField(6));

  FpField K(7);
  CHECK(K.eq(K.add(K.from_long(5), K.from_long(4)), K.from_long(2)));
  CHECK(K.eq(K.mul(K.from_long(3), K.from_long(5)), K.one()));
  CHECK(K.eq(K.inv(K.from_long(3)), K.from_long(5)));
  CHECK(K.eq(K.from_long(-1), K.from_long(6)));
  auto v = K.parse("12");
  REQUIRE(v.has_value());
  CHECK(K.eq(*v, K.from_long(5)));
}

TEST_CASE("kernel of the identity is trivial") {
  RatField K;
  Matrix<RatField> I = mat_identity(K, 2);
  Matrix<RatField> ker = kernel_basis(K, I);
  CHECK(ker.cols == 0);
  CHECK(mat_rank(K, I) == 2);
}

TEST_CASE("kernel of [1 1] over GF(2)") {
  FpField K(2);
  Matrix<FpField> A = mat_of(K, 1, 2, {1, 1});
  Matrix<FpField> ker = kernel_basis(K, A);  // kernel vectors as columns
  REQUIRE(ker.cols == 1);
  CHECK(K.eq(ker.at(0, 0), K.one()));
  CHECK(K.eq(ker.at(1, 0), K.one()));
}

TEST_CASE("kernels of the degree-2 symmetrisers id +- tau") {
  RatField K;
  Matrix<RatField> tau = tau_matrix(K, 2);

  // id + tau on V (x) V, dim V = 2: kernel spanned by v1v2 - v2v1
  Matrix<RatField> plus = mat_add(K, mat_identity(K, 4), tau);
  Matrix<RatField> ker = kernel_basis(K, plus);
  REQUIRE(ker.cols == 1);
  // canonical kernel column: 1 in the free coordinate (v2v1), -1 on the pivot
  Vec<RatField> expect = vec_of(K, {0, -1, 1, 0});
  for (std::size_t j = 0; j < 4; ++j) CHECK(K.eq(ker.at(j, 0), expect[j]));

  // id - tau (the Psi = -tau symmetriser): kernel = symmetric part, dim 3
  Matrix<RatField> minus = mat_sub(K, mat_identity(K, 4), tau);
  CHECK(kernel_basis(K, minus).cols == 3);
}

TEST_CASE("kronecker products") {
  RatField K;
  CHECK(mat_eq(K, mat_kron(K, mat_identity(K, 2), mat_identity(K, 3)),
               mat_identity(K, 6)));
  Matrix<RatField> sw = mat_of(K, 2, 2, {0, 1, 1, 0});
  Matrix<RatField> two = mat_of(K, 1, 1, {2});
  CHECK(mat_eq(K, mat_kron(K, sw, two), mat_of(K, 2, 2, {0, 2, 2, 0})));

  // tau_2 (x) I_2 swaps the first two of three tensor legs
  Matrix<RatField> T = mat_kron(K, tau_matrix(K, 2), mat_identity(K, 2));
  REQUIRE(T.rows == 8);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        std::size_t src = i * 4 + j * 2 + k, dst = j * 4 + i * 2 + k;
        for (std::size_t r = 0; r < 8; ++r)
          CHECK(K.eq(T.at(r, src), r == dst ? K.one() : K.zero()));
      }
}

TEST_CASE("bareiss and gauss eliminations agree over the rationals") {
  RatField K;
  Matrix<RatField> A = mat_of(K, 3, 4, {2, 4, 1, 3, 1, 2, 0, 1, 3, 6, 1, 4});
  Echelon<RatField> eb = rref(K, A);                  // Bareiss path
  Echelon<RatField> eg = detail::rref_gauss(K, A);    // generic path
  CHECK(eb.pivots == eg.pivots);
  CHECK(mat_eq(K, eb.R, eg.R));
  CHECK(mat_rank(K, A) == 2);
}

TEST_CASE("solving linear systems") {
  RatField K;
  Matrix<RatField> A = mat_of(K, 2, 2, {1, 2, 3, 4});
  Vec<RatField> b = vec_of(K, {5, 6});
  auto x = mat_solve(K, A, b);
  REQUIRE(x.has_value());
  Vec<RatField> Ax = mat_apply(K, A, *x);
  CHECK(K.eq(Ax[0], b[0]));
  CHECK(K.eq(Ax[1], b[1]));

  Matrix<RatField> S = mat_of(K, 2, 2, {1, 1, 1, 1});
  CHECK_FALSE(mat_solve(K, S, vec_of(K, {0, 1})).has_value());
}

TEST_CASE("subspace operations") {
  RatField K;
  // two planes in Q^3 meet in a line
  Subspace<RatField> P1 =
      subspace_from_rows(K, mat_of(K, 2, 3, {1, 0, 0, 0, 1, 0}));
  Subspace<RatField> P2 =
      subspace_from_rows(K, mat_of(K, 2, 3, {0, 1, 0, 0, 0, 1}));
  Subspace<RatField> L = subspace_intersect(K, P1, P2);
  CHECK(L.dim() == 1);
  CHECK(subspace_contains(K, L, vec_of(K, {0, 1, 0})));
  Subspace<RatField> S = subspace_sum(K, P1, P2);
  CHECK(S.dim() == 3);
  CHECK(subspace_leq(K, L, P1));
  CHECK_FALSE(subspace_leq(K, P1, L));

  // canonical row form is order independent
  Subspace<RatField> Pa =
      subspace_from_rows(K, mat_of(K, 2, 3, {0, 1, 0, 1, 0, 0}));
  CHECK(subspace_eq(K, P1, Pa));

  // reduction against a subspace kills exactly the subspace
  Vec<RatField> v = vec_of(K, {3, 4, 5});
  Vec<RatField> r = subspace_reduce(K, P1, v);
  CHECK(K.eq(r[0], K.zero()));
  CHECK(K.eq(r[1], K.zero()));
  CHECK(K.eq(r[2], K.from_long(5)));
  Vec<RatField> rr = subspace_reduce(K, P1, r);
  for (std::size_t i = 0; i < 3; ++i) CHECK(K.eq(rr[i], r[i]));

  // complement test matrix vanishes exactly on the subspace
  Matrix<RatField> T = complement_test(K, P1);
  Vec<RatField> inP = vec_of(K, {7, -2, 0});
  Vec<RatField> img = mat_apply(K, T, inP);
  for (const auto& x : img) CHECK(K.is_zero(x));
  Vec<RatField> outP = vec_of(K, {0, 0, 1});
  Vec<RatField> img2 = mat_apply(K, T, outP);
  bool nonzero = false;
  for (const auto& x : img2) nonzero = nonzero || !K.is_zero(x);
  CHECK(nonzero);

  CHECK(subspace_complement_coords(P1) == std::vector<std::size_t>{2});
}

TEST_CASE("subspace from kernel matches kernel basis") {
  FpField K(5);
  Matrix<FpField> A = mat_of(K, 2, 4, {1, 2, 3, 4, 2, 4, 1, 3});
  Subspace<FpField> ker = subspace_from_kernel(K, A);
  CHECK(ker.dim() == 4 - mat_rank(K, A));
  for (std::size_t r = 0; r < ker.rows.rows; ++r) {
    Vec<FpField> img = mat_apply(K, A, mat_row(K, ker.rows, r));
    for (const auto& x : img) CHECK(K.is_zero(x));
  }
}
