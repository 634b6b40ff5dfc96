// Nichols-Woronowicz quotients: the transposition module of S3 (a
// twelve-dimensional quotient), the quantum line, and the exterior algebra
// smash product.

#include <cstdio>
#include <numeric>

#include "bd/builtin.hpp"

using namespace bd;

int main() {
  RatField K;
  auto fk = transposition_example(K, 3, true);
  GradedQuotient<RatField> gq = nichols_quotient(fk.q, 5);
  std::vector<std::size_t> dims = gq.dims();
  std::printf("transposition module of S3: quotient dims");
  for (std::size_t v : dims) std::printf(" %zu", v);
  std::printf(" (total %zu)\n",
              std::accumulate(dims.begin(), dims.end(), std::size_t(0)));
  std::printf("quadratic relation space: dim %zu of %zu\n", gq.rel[2].dim(),
              std::size_t(9));
  Matrix<RatField> Psi = yd_braiding(*fk.yd);
  std::printf("symmetrizer ranks match the factorial ranks: %s\n\n",
              woronowicz_hilbert(K, Psi, 3, 4) == braided_hilbert(K, Psi, 3, 4)
                  ? "yes"
                  : "no");

  FpField K7(7);
  auto ql = qline_example(K7, 3, K7.from_long(2));
  std::vector<std::size_t> qdims = nichols_quotient(ql.q, 4).dims();
  std::printf("quantum line over GF(7) at q = 2: dims");
  for (std::size_t v : qdims) std::printf(" %zu", v);
  std::printf("  ([3] = 1 + 2 + 4 = 0 mod 7)\n\n");

  FinGroup C2 = FinGroup::cyclic(2);
  ExteriorSmashReport<RatField> rep = exterior_smash_report(K, C2, 2);
  std::printf("exterior smash Lambda(k^2) # kC2: dim %zu\n", rep.smash_dim);
  std::printf("  omega central: %s, omega^2 = 0: %s, Delta multiplicative: %s\n",
              rep.omega_central ? "yes" : "no",
              rep.omega_square_zero ? "yes" : "no",
              rep.delta_multiplicative ? "yes" : "no");
  return 0;
}
