#pragma once

#include "hopfcore/rational.hpp"

#include <cstdint>
#include <random>

namespace hopfcore {

// Seeded source for the randomized checks. Uses only the raw engine output
// (no std distributions), so sequences are identical across standard
// libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  // Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (engine_() & 1) != 0; }
  // Small rational p/q with |p| ≤ 3, 1 ≤ q ≤ 2; may be zero.
  Rational small_rational() {
    Rational q(range(-3, 3), range(1, 2));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational() {
    for (;;) {
      Rational q = small_rational();
      if (sgn(q) != 0)
        return q;
    }
  }

private:
  std::mt19937_64 engine_;
};

} // namespace hopfcore
