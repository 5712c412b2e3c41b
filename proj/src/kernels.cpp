#include "hopfcore/kernels.hpp"

#include <omp.h>

namespace hopfcore::kernels {

namespace {
constexpr std::size_t parallel_threshold = 1 << 14;
}

bool use_parallel(Exec exec, std::size_t work) {
  switch (exec) {
  case Exec::serial:
    return false;
  case Exec::parallel:
    return true;
  case Exec::automatic:
    break;
  }
  return work >= parallel_threshold && omp_get_max_threads() > 1;
}

void eliminate_serial(QMatrix& m, std::size_t pivot_row, std::size_t col) {
  const auto pivot = m.row(pivot_row);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r == pivot_row || sgn(m(r, col)) == 0)
      continue;
    Rational factor = m(r, col);
    auto target = m.row(r);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (sgn(pivot[c]) != 0)
        target[c] -= factor * pivot[c];
  }
}

void eliminate_parallel(QMatrix& m, std::size_t pivot_row, std::size_t col) {
  const auto rows = static_cast<std::int64_t>(m.rows());
  const std::size_t cols = m.cols();
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < rows; ++r) {
    const auto row = static_cast<std::size_t>(r);
    if (row == pivot_row || sgn(m(row, col)) == 0)
      continue;
    Rational factor = m(row, col);
    const auto pivot = m.row(pivot_row);
    auto target = m.row(row);
    for (std::size_t c = col; c < cols; ++c)
      if (sgn(pivot[c]) != 0)
        target[c] -= factor * pivot[c];
  }
}

} // namespace hopfcore::kernels
