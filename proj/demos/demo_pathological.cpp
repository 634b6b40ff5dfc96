// Walkthrough of the pathological quasi-YD module over C2: the left half of
// the minimal double stays a free algebra on two variables while the right
// half collapses to a polynomial algebra on one.

#include <cstdio>

#include "bd/builtin.hpp"
#include "bd/cherednik.hpp"

using namespace bd;

int main() {
  RatField K;
  ExampleBundle<RatField> b = pathological_example(K);
  std::printf("pathological quasi-YD module: dim V = %zu over C2 (order %u)\n",
              b.M.d, b.G->order());
  std::printf("qyd axioms: %s\n", qyd_check(b.q).ok ? "ok" : "violated");
  std::printf("commutative (Dunkl-type) structure maps: %s\n\n",
              qyd_commutative_left(b.q).ok ? "yes" : "no");

  DoubleSpec<RatField> spec = minimal_double(b.q, 4);
  std::printf("cross commutators in the double:\n");
  for (std::uint32_t j = 0; j < 2; ++j)
    for (std::uint32_t i = 0; i < 2; ++i) {
      NormalForm<RatField> fj, vi;
      nf_add_term(K, fj, nf_key({}, 0, {j}), K.one());
      nf_add_term(K, vi, nf_key({i}, 0, {}), K.one());
      NormalForm<RatField> c = nf_commutator(spec, fj, vi);
      std::printf("  [f%u, v%u] = %s\n", j + 1, i + 1,
                  nf_str(spec, c).c_str());
    }

  std::printf("\ngraded dimensions to degree 4:\n  U(V)  :");
  for (std::size_t n = 0; n <= 4; ++n)
    std::printf(" %zu", spec.leftBasis[n].size());
  std::printf("   (free: 2^n)\n  U(V*) :");
  for (std::size_t n = 0; n <= 4; ++n)
    std::printf(" %zu", spec.rightBasis[n].size());
  std::printf("   (polynomial algebra on f1)\n");

  Matrix<RatField> F2 = qb_factorial(b.q, 2);
  std::printf("\nquasibraided factorial at degree 2: %zux%zu, rank %zu\n",
              F2.rows, F2.cols, mat_rank(K, F2));
  std::printf("degree-1 kernels: left %zu, right %zu (f2 dies)\n",
              spec.leftRel[1].dim(), spec.rightRel[1].dim());
  return 0;
}
