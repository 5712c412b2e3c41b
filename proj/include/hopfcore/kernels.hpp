#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version
// that the OpenMP version must reproduce exactly; the tests compare them
// and bench/ times them against each other. Each output slot is written
// by exactly one iteration, so results do not depend on thread count.

#include "hopfcore/matrix.hpp"

#include <cstdint>
#include <exception>
#include <span>
#include <vector>

namespace hopfcore {

enum class Exec { automatic, serial, parallel };

namespace kernels {

// True when the parallel path should be taken for `work` inner operations.
bool use_parallel(Exec exec, std::size_t work);

// Clears column `col` in every row except `pivot_row`, whose entry at `col`
// must be 1. Columns left of `col` are assumed already zero in the pivot row.
void eliminate_serial(QMatrix& m, std::size_t pivot_row, std::size_t col);
void eliminate_parallel(QMatrix& m, std::size_t pivot_row, std::size_t col);

// One term c * (e_left ⊗ e_right) of a comultiplication expanded in a
// fixed basis, with basis elements given by position.
struct ComultTerm {
  std::uint32_t left;
  std::uint32_t right;
  Rational coeff;
};

using ComultTable = std::vector<std::vector<ComultTerm>>;

// out[n] = sum over terms (i, j, c) of table[n] of c * mul(f[i], g[j]).
// `mul` may throw; the exception of the lowest failing n is rethrown.
template <class Mul>
std::vector<Vector> convolve_serial(const ComultTable& table,
                                    std::span<const Vector> f,
                                    std::span<const Vector> g,
                                    std::size_t ring_dim, Mul&& mul) {
  std::vector<Vector> out(table.size(), Vector(ring_dim));
  for (std::size_t n = 0; n < table.size(); ++n) {
    for (const auto& t : table[n]) {
      if (is_zero(f[t.left]) || is_zero(g[t.right]))
        continue;
      axpy(out[n], t.coeff, mul(f[t.left], g[t.right]));
    }
  }
  return out;
}

template <class Mul>
std::vector<Vector> convolve_parallel(const ComultTable& table,
                                      std::span<const Vector> f,
                                      std::span<const Vector> g,
                                      std::size_t ring_dim, Mul&& mul) {
  std::vector<Vector> out(table.size(), Vector(ring_dim));
  std::vector<std::exception_ptr> errors(table.size());
  const auto count = static_cast<std::int64_t>(table.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t n = 0; n < count; ++n) {
    try {
      for (const auto& t : table[n]) {
        if (is_zero(f[t.left]) || is_zero(g[t.right]))
          continue;
        axpy(out[n], t.coeff, mul(f[t.left], g[t.right]));
      }
    } catch (...) {
      errors[n] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

} // namespace kernels
} // namespace hopfcore
