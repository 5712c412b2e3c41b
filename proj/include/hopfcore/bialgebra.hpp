#pragma once

#include "hopfcore/matrix.hpp"
#include "hopfcore/monoid.hpp"
#include "hopfcore/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopfcore {

struct TensorTerm {
  std::size_t left;
  std::size_t right;
  Rational coeff;
};

// Sparse element of V⊗V in basis coordinates.
using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, Rational>;

struct BialgebraTables {
  std::vector<std::string> labels;
  unsigned degree_bound = 0;
  // Optional degree label per basis element; empty when not supplied.
  std::vector<unsigned> degrees;
  // Row-major dim×dim; nullopt marks a product beyond the truncation.
  std::vector<std::optional<Vector>> mult;
  std::vector<std::vector<TensorTerm>> comult;
  Vector counit;
  std::size_t unit_index = 0;
  std::optional<std::vector<Vector>> antipode;
};

// Structure constants of a bialgebra truncated at a degree bound. Immutable.
class FilteredBialgebra {
public:
  // Throws FormatError on inconsistent shapes.
  explicit FilteredBialgebra(BialgebraTables tables);

  std::size_t dim() const noexcept { return t_.labels.size(); }
  unsigned degree_bound() const noexcept { return t_.degree_bound; }
  const std::vector<std::string>& labels() const noexcept { return t_.labels; }
  const std::string& label(std::size_t i) const { return t_.labels[i]; }
  const std::vector<unsigned>& degrees() const noexcept { return t_.degrees; }
  const BialgebraTables& tables() const noexcept { return t_; }
  std::optional<std::size_t> find_label(const std::string& label) const;

  const std::optional<Vector>& product(std::size_t i, std::size_t j) const {
    return t_.mult[i * dim() + j];
  }
  // Throws TruncationError when a needed table entry is undefined.
  Vector multiply(std::span<const Rational> a, std::span<const Rational> b) const;
  std::optional<Vector> try_multiply(std::span<const Rational> a,
                                     std::span<const Rational> b) const;

  const std::vector<TensorTerm>& comult(std::size_t i) const { return t_.comult[i]; }
  Tensor2 comultiply_sparse(std::span<const Rational> a) const;
  QMatrix comultiply(std::span<const Rational> a) const;

  const Vector& counit_vector() const noexcept { return t_.counit; }
  Rational counit(std::span<const Rational> a) const { return dot(t_.counit, a); }

  std::size_t unit_index() const noexcept { return t_.unit_index; }
  Vector unit() const { return unit_vector(dim(), t_.unit_index); }

  bool has_antipode() const noexcept { return t_.antipode.has_value(); }
  Vector antipode(std::span<const Rational> a) const;

private:
  BialgebraTables t_;
};

// Axiom report: one line per (axiom, basis element).
Report verify_axioms(const FilteredBialgebra& h);

struct LieAlgebra {
  std::vector<std::string> generators;
  // bracket[i][j] = [x_i, x_j] in generator coordinates.
  std::vector<std::vector<Vector>> bracket;

  std::size_t dim() const noexcept { return generators.size(); }
  static LieAlgebra abelian(std::vector<std::string> generators);
  static LieAlgebra heisenberg();  // [x,y] = z
  static LieAlgebra sl2(std::vector<std::string> order = {"e", "f", "h"});
};

// Throws NotALieAlgebra on antisymmetry or Jacobi failure.
void check_lie(const LieAlgebra& lie);

// Enveloping algebra on ordered divided-power monomials of degree ≤ D.
FilteredBialgebra build_ueg(const LieAlgebra& lie, unsigned D);
// ℚ[x,y,w], weights 1,1,2, with x, y primitive and Δw = w⊗1 + 1⊗w + x⊗y.
FilteredBialgebra build_xyw(unsigned D);
// The group algebra of ℤ/2: {1, g}, Δg = g⊗g.
FilteredBialgebra build_grouplike();

// Generator sets used by the builders, for labelling.
GeneratorSet ueg_generators(const LieAlgebra& lie);
GeneratorSet xyw_generators();

} // namespace hopfcore

namespace hopfcore {

// "2*x + 1/2*y*z", "0"; labels index the coordinates.
std::string format_vector(const std::vector<std::string>& labels,
                          std::span<const Rational> v);

} // namespace hopfcore
