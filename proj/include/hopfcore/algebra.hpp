#pragma once

#include "hopfcore/matrix.hpp"
#include "hopfcore/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfcore {

// Finite-dimensional algebra over ℚ given by structure constants on a
// basis. Products marked nullopt lie beyond a truncation.
class TableAlgebra {
public:
  TableAlgebra() = default;
  // Throws FormatError on inconsistent shapes.
  TableAlgebra(std::string name, std::vector<std::string> labels,
               std::vector<std::optional<Vector>> table, Vector one,
               std::vector<unsigned> degrees = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
  const Vector& one() const noexcept { return one_; }
  Vector zero() const { return Vector(dim()); }
  Vector basis_element(std::size_t i) const { return unit_vector(dim(), i); }

  const std::optional<Vector>& product(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  // Throws TruncationError on an undefined entry.
  Vector multiply(std::span<const Rational> a, std::span<const Rational> b) const;
  std::optional<Vector> try_multiply(std::span<const Rational> a,
                                     std::span<const Rational> b) const;
  std::string format(std::span<const Rational> v) const;

  // Associativity on defined basis triples and unit laws.
  Report check_laws() const;

  bool operator==(const TableAlgebra& other) const = default;

private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::optional<Vector>> table_;
  Vector one_;
  std::vector<unsigned> degrees_;
};

struct RingFlags {
  bool prime = false;
  bool semiprime = false;
  bool domain = false;
  bool operator==(const RingFlags&) const = default;
};

class CoefficientRing : public TableAlgebra {
public:
  CoefficientRing() = default;
  CoefficientRing(TableAlgebra algebra, std::optional<RingFlags> declared)
      : TableAlgebra(std::move(algebra)), declared_(declared) {}
  const std::optional<RingFlags>& declared() const noexcept { return declared_; }

private:
  std::optional<RingFlags> declared_;
};

// q = ℚ, m2q = M_2(ℚ), qxq = ℚ×ℚ, qx2 = ℚ[x]/(x²). Throws FormatError.
CoefficientRing builtin_ring(const std::string& name);

struct RingCheck {
  Report report;
  RingFlags found;  // flags after brute-force refutation search
  // Witnesses of the refutations, formatted; empty when none was found.
  std::string prime_refutation;
  std::string semiprime_refutation;
  std::string zero_divisor;
};

// Searches basis elements and sums/differences of two for a pair with
// aRb = 0, an a with aRa = 0, and a pair with ab = 0.
RingCheck ring_check(const CoefficientRing& ring);

// Basis elements, then e_i + e_j and e_i - e_j for i < j.
std::vector<Vector> scan_candidates(std::size_t dim);

} // namespace hopfcore
