#include <catch2/catch_amalgamated.hpp>

#include "bd/gmodule.hpp"
#include "helpers.hpp"

using namespace bd;
using bdtest::mat_of;
using bdtest::vec_of;

TEST_CASE("builtin modules pass the axioms") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  CHECK(check_module(module_trivial(K, G, 2)).ok);
  CHECK(check_module(module_sign(K, G)).ok);
  CHECK(check_module(module_permutation(K, G)).ok);
  CHECK(check_module(module_regular(K, G)).ok);
  GModule<RatField> V = module_reflection(K, G);
  CHECK(V.d == 2);
  CHECK(check_module(V).ok);
}

TEST_CASE("a non-homomorphic assignment fails the checker") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  // (1 2) -> a matrix of infinite order cannot define a representation
  GModule<RatField> M = module_from_generator_matrices(
      K, G, {mat_of(K, 2, 2, {1, 1, 0, 1}), mat_identity(K, 2)});
  CHECK_FALSE(check_module(M).ok);
}

TEST_CASE("generator matrices reproduce the reflection module") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> V = module_reflection(K, G);
  // images of the two Coxeter generators (1 2) and (2 3)
  GModule<RatField> W = module_from_generator_matrices(
      K, G, {V.of(G.by_label("(1 2)")), V.of(G.by_label("(2 3)"))});
  REQUIRE(check_module(W).ok);
  for (gid g = 0; g < G.order(); ++g) CHECK(mat_eq(K, W.of(g), V.of(g)));
}

TEST_CASE("duals") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);

  GModule<RatField> T = module_trivial(K, G);
  GModule<RatField> Td = module_dual(T);
  for (gid g = 0; g < G.order(); ++g) CHECK(mat_eq(K, Td.of(g), T.of(g)));

  GModule<RatField> sg = module_sign(K, G);
  GModule<RatField> sgd = module_dual(sg);
  for (gid g = 0; g < G.order(); ++g) CHECK(mat_eq(K, sgd.of(g), sg.of(g)));

  // <g . f, g . v> = <f, v> for the reflection module and its dual
  GModule<RatField> V = module_reflection(K, G);
  GModule<RatField> Vd = module_dual(V);
  CHECK(check_module(Vd).ok);
  for (gid g = 0; g < G.order(); ++g) {
    Matrix<RatField> pair = mat_mul(K, mat_transpose(K, Vd.of(g)), V.of(g));
    CHECK(mat_eq(K, pair, mat_identity(K, 2)));
  }
}

TEST_CASE("tensor products") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> V = module_reflection(K, G);

  GModule<RatField> TV = module_tensor(module_trivial(K, G), V);
  for (gid g = 0; g < G.order(); ++g) CHECK(mat_eq(K, TV.of(g), V.of(g)));

  GModule<RatField> ss = module_tensor(module_sign(K, G), module_sign(K, G));
  for (gid g = 0; g < G.order(); ++g)
    CHECK(mat_eq(K, ss.of(g), mat_identity(K, 1)));

  GModule<RatField> VV = module_tensor(V, V);
  CHECK(VV.d == 4);
  CHECK(check_module(VV).ok);
  for (gid g = 0; g < G.order(); ++g) {
    auto trace = [&](const Matrix<RatField>& A) {
      auto t = K.zero();
      for (std::size_t i = 0; i < A.rows; ++i) t = K.add(t, A.at(i, i));
      return t;
    };
    CHECK(K.eq(trace(VV.of(g)), K.mul(trace(V.of(g)), trace(V.of(g)))));
  }
}

TEST_CASE("tensor powers of a single element") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> V = module_reflection(K, G);
  gid g = G.by_label("(1 2 3)");
  Matrix<RatField> P3 = module_tensor_power_of(V, g, 3);
  Matrix<RatField> expected =
      mat_kron(K, V.of(g), mat_kron(K, V.of(g), V.of(g)));
  CHECK(mat_eq(K, P3, expected));
  CHECK(mat_eq(K, module_tensor_power_of(V, g, 0), mat_identity(K, 1)));
}

TEST_CASE("characters induce one-dimensional modules") {
  FpField K(7);
  FinGroup G = FinGroup::cyclic(3);
  // z acts by the primitive cube root 2 in GF(7)
  std::vector<FpField::Elem> vals = {1, 2, 4};
  GModule<FpField> M = module_character(K, G, vals);
  CHECK(check_module(M).ok);
  CHECK(K.eq(M.of(1).at(0, 0), K.from_long(2)));
  // non-multiplicative values fail
  std::vector<FpField::Elem> bad = {1, 2, 3};
  CHECK_FALSE(check_module(module_character(K, G, bad)).ok);
}

TEST_CASE("commutant triviality distinguishes irreducibles") {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  CHECK(module_commutant_is_trivial(module_reflection(K, G)));
  CHECK_FALSE(module_commutant_is_trivial(module_permutation(K, G)));
}
