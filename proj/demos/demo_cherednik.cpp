// Rational Cherednik algebra H_{t,c} of S3 on its reflection module: root
// data, daggered commutators, PBW slices, the restricted quotient, and the
// embedding into the double over the conjugation module.

#include <cstdio>

#include "bd/cherednik.hpp"

using namespace bd;

int main() {
  RatField K;
  FinGroup G = FinGroup::symmetric(3);
  GModule<RatField> M = module_reflection(K, G);

  std::printf("reflections of S3 on the reflection module:\n");
  for (const RootDatum<RatField>& rd : root_data(M)) {
    std::printf("  s = %-8s alpha = (%s, %s)  alpha_check = (%s, %s)\n",
                G.label(rd.s).c_str(), K.str(rd.alpha[0]).c_str(),
                K.str(rd.alpha[1]).c_str(), K.str(rd.alpha_check[0]).c_str(),
                K.str(rd.alpha_check[1]).c_str());
  }

  ReflectionParams<RatField> c = constant_params(M, K.one());
  auto kappa = kappa_of(M, c);
  std::printf("kappa(c = 1) = %s\n\n", K.str(*kappa).c_str());

  DoubleSpec<RatField> spec = cherednik_double(M, K.one(), c, 3);
  std::printf("commutators in H_{1,1}(S3):\n");
  for (std::uint32_t j = 0; j < 2; ++j)
    for (std::uint32_t i = 0; i < 2; ++i) {
      NormalForm<RatField> fj, vi;
      nf_add_term(K, fj, nf_key({}, 0, {j}), K.one());
      nf_add_term(K, vi, nf_key({i}, 0, {}), K.one());
      std::printf("  [f%u, v%u] = %s\n", j + 1, i + 1,
                  nf_str(spec, nf_commutator(spec, fj, vi)).c_str());
    }

  PBWReport<RatField> pbw = pbw_check(spec);
  std::printf("\nPBW check: %s; slice dims (a, b) -> (a+1)*6*(b+1):\n",
              pbw.pass ? "pass" : "fail");
  for (const auto& [ab, dim] : pbw.slice_dims)
    if (ab.first + ab.second <= 2)
      std::printf("  (%zu, %zu) -> %zu\n", ab.first, ab.second, dim);

  RestrictedReport<RatField> rr = restricted_dims(M, c, 4);
  std::printf("\nrestricted double at t = 0: coinvariant dims");
  for (std::size_t v : rr.coinv_dims) std::printf(" %zu", v);
  std::printf(", total dim %zu\n", rr.total_dim);

  for (long t = 0; t <= 1; ++t) {
    EmbedReport<RatField> er = embed_check(M, K.from_long(t), c, 3);
    std::printf("embedding at t = %ld: %s (t' = %s)\n", t,
                er.pass ? "pass" : "fail", K.str(er.t_prime).c_str());
  }
  return 0;
}
