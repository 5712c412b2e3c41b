// Serial reference kernels against their OpenMP versions.
#include "hopfcore/bialgebra.hpp"
#include "hopfcore/convolution.hpp"
#include "hopfcore/linalg.hpp"
#include "hopfcore/pipeline.hpp"
#include "hopfcore/random.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace hopfcore;

namespace {

QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  QMatrix m(n, n + n / 2);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = Rational(static_cast<long>(rng.below(19)) - 9, 1 + static_cast<long>(rng.below(4)));
  return m;
}

void eliminate(benchmark::State& state, Exec exec) {
  const QMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(row_reduce(m, exec).rank());
}

struct ConvCase {
  ConvElement f, g;
};

ConvCase conv_case(unsigned D) {
  static std::map<unsigned, std::shared_ptr<const PbwStructure>> hosts;
  auto& host = hosts[D];
  if (!host)
    host = run_pipeline(std::make_shared<const FilteredBialgebra>(
                            build_ueg(LieAlgebra::heisenberg(), D)))
               .pbw;
  auto ring = std::make_shared<const CoefficientRing>(builtin_ring("m2q"));
  Rng rng(11);
  return {random_element(host, ring, rng, D / 2), random_element(host, ring, rng, D / 2)};
}

void convolution(benchmark::State& state, Exec exec) {
  const ConvCase c = conv_case(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(convolve(c.f, c.g, exec).is_zero());
}

} // namespace

BENCHMARK_CAPTURE(eliminate, serial, Exec::serial)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(eliminate, parallel, Exec::parallel)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(convolution, serial, Exec::serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(convolution, parallel, Exec::parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
