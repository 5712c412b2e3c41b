#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hopfcore {

struct Generator {
  std::string id;
  unsigned degree;
};

// Finitely supported function from generator positions to positive
// multiplicities. Positions refer to a GeneratorSet; entries are kept sorted
// by position with no zero multiplicities.
class MultiIndex {
public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (position, multiplicity)

  MultiIndex() = default;
  static MultiIndex delta(std::uint32_t position, std::uint32_t multiplicity = 1);
  // From a dense exponent vector.
  static MultiIndex from_exponents(std::span<const std::uint32_t> exponents);

  std::uint32_t operator[](std::uint32_t position) const;
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t support_size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  // Largest position in the support; undefined for zero.
  std::uint32_t max_position() const { return entries_.back().first; }

  MultiIndex operator+(const MultiIndex& other) const;
  // Pointwise ≤.
  bool divides(const MultiIndex& other) const;
  // this - other; requires other.divides(*this).
  MultiIndex operator-(const MultiIndex& other) const;
  std::vector<std::uint32_t> exponents(std::size_t generator_count) const;

  bool operator==(const MultiIndex&) const = default;
  // Lexicographic on entries; only for containers, not the monoid order.
  bool structural_less(const MultiIndex& other) const { return entries_ < other.entries_; }

private:
  void set(std::uint32_t position, std::uint32_t multiplicity);
  std::vector<Entry> entries_;
};

struct StructuralLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return a.structural_less(b);
  }
};

// Ordered generators with positive degrees, listed in nondecreasing degree;
// list position is the order on Λ.
class GeneratorSet {
public:
  GeneratorSet() = default;
  // Throws FormatError on degree 0, decreasing degrees, or duplicate ids.
  explicit GeneratorSet(std::vector<Generator> generators);

  std::size_t size() const noexcept { return generators_.size(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }

  // Throws ForeignGenerator.
  std::uint32_t index_of(const std::string& id) const;
  void validate(const MultiIndex& m) const;
  MultiIndex delta(const std::string& id, std::uint32_t multiplicity = 1) const;

  MultiIndex add(const MultiIndex& m, const MultiIndex& n) const;
  unsigned degree(const MultiIndex& m) const;
  std::strong_ordering compare(const MultiIndex& m, const MultiIndex& n) const;
  bool less(const MultiIndex& m, const MultiIndex& n) const { return compare(m, n) < 0; }
  // Throws EmptySet.
  MultiIndex min_of(std::span<const MultiIndex> set) const;
  // All multi-indices of degree ≤ d, ascending.
  std::vector<MultiIndex> enumerate_up_to(unsigned d) const;
  // Number of multi-indices of degree exactly d.
  std::size_t count_of_degree(unsigned d) const;

  // "0", "x", "2*x+y"
  std::string format(const MultiIndex& m) const;
  // "1", "x^2*y"; with divided = true "x^[2]*y".
  std::string format_monomial(const MultiIndex& m, bool divided) const;
  // Inverse of format. Throws FormatError / ForeignGenerator.
  MultiIndex parse(const std::string& text) const;

private:
  std::vector<Generator> generators_;
};

} // namespace hopfcore
