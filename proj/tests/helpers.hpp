#pragma once
// Small shared helpers for the test suites.

#include <initializer_list>
#include <vector>

#include "bd/braided_ops.hpp"
#include "bd/field.hpp"
#include "bd/matrix.hpp"

namespace bdtest {

template <class F>
bd::Vec<F> vec_of(const F& K, std::initializer_list<long> xs) {
  bd::Vec<F> v;
  for (long x : xs) v.push_back(K.from_long(x));
  return v;
}

template <class F>
bd::Matrix<F> mat_of(const F& K, std::size_t r, std::size_t c,
                     std::initializer_list<long> xs) {
  bd::Matrix<F> M = bd::mat_zeros(K, r, c);
  std::size_t i = 0;
  for (long x : xs) M.a[i++] = K.from_long(x);
  return M;
}

template <class F>
std::vector<std::size_t> dims_of(const std::vector<bd::Subspace<F>>& rel,
                                 std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < rel.size(); ++n)
    out.push_back(bd::ipow(d, n) - rel[n].dim());
  return out;
}

}  // namespace bdtest
