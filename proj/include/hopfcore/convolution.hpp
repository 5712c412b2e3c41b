#pragma once

#include "hopfcore/algebra.hpp"
#include "hopfcore/kernels.hpp"
#include "hopfcore/pbw.hpp"
#include "hopfcore/random.hpp"
#include "hopfcore/report.hpp"

#include <functional>
#include <memory>

namespace hopfcore {

// f ∈ Hom(H, R) truncated at the host degree bound, stored as its values
// f(e_n) on the PBW basis, indexed by PBW position.
class ConvElement {
public:
  ConvElement(std::shared_ptr<const PbwStructure> host,
              std::shared_ptr<const CoefficientRing> ring);
  ConvElement(std::shared_ptr<const PbwStructure> host,
              std::shared_ptr<const CoefficientRing> ring, std::vector<Vector> values);

  const std::shared_ptr<const PbwStructure>& host() const noexcept { return host_; }
  const std::shared_ptr<const CoefficientRing>& ring() const noexcept { return ring_; }
  const std::vector<Vector>& values() const noexcept { return values_; }
  const Vector& value_at(std::size_t pos) const { return values_[pos]; }
  const Vector& value(const MultiIndex& n) const { return values_[host_->position(n)]; }
  void set(const MultiIndex& n, Vector v);
  bool is_zero() const;
  // Support as multi-indices, ascending.
  std::vector<MultiIndex> support() const;

  bool operator==(const ConvElement& other) const;

private:
  std::shared_ptr<const PbwStructure> host_;
  std::shared_ptr<const CoefficientRing> ring_;
  std::vector<Vector> values_;
};

// (f∗g)(e_n) = Σ c f(e_i) g(e_j) over Δ(e_n) = Σ c e_i⊗e_j.
// Throws HostMismatch, RingMismatch, TruncationError (ring products).
ConvElement convolve(const ConvElement& f, const ConvElement& g, Exec exec = Exec::automatic);
ConvElement unit_conv(std::shared_ptr<const PbwStructure> host,
                      std::shared_ptr<const CoefficientRing> ring);
// n ↦ r at n = 0, zero elsewhere.
ConvElement epsilon_pullback(std::shared_ptr<const PbwStructure> host,
                             std::shared_ptr<const CoefficientRing> ring, Vector r);

struct LeadingTerm {
  MultiIndex index;
  std::size_t position;
  Vector value;
};

// Smallest support index and the value there. Throws ZeroElement.
LeadingTerm leading(const ConvElement& f);
Vector u_star(const ConvElement& f);

// Both clauses of the leading-term property for f∗g; one report line,
// inconclusive when |f+g| exceeds the degree bound.
Report check_tech2(const ConvElement& f, const ConvElement& g, Exec exec = Exec::automatic);

struct Witness {
  Vector r;
  ConvElement u;
  LeadingTerm proof;  // leading(s∗u∗t)
};

// Builds u with u(1) = r inside the convolution algebra in use.
using Lift = std::function<ConvElement(const Vector& r)>;

// Scans r over basis elements, then sums/differences of two, for
// s_min r t_min ≠ 0; u = lift(r) (ε-pullback by default). Asserts
// leading(s∗u∗t) = (s+t, s_min r t_min). Throws NoWitnessFound,
// TruncationError.
Witness prime_witness(const ConvElement& s, const ConvElement& t, const Lift& lift = {});
Witness semiprime_witness(const ConvElement& s, const Lift& lift = {});

// Nonzero element with support of degree ≤ max_degree; each value is a
// random ring element with small rational coordinates.
ConvElement random_element(std::shared_ptr<const PbwStructure> host,
                           std::shared_ptr<const CoefficientRing> ring, Rng& rng,
                           unsigned max_degree);

} // namespace hopfcore
