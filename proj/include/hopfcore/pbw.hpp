#pragma once

#include "hopfcore/bialgebra.hpp"
#include "hopfcore/coradical.hpp"
#include "hopfcore/kernels.hpp"
#include "hopfcore/monoid.hpp"
#include "hopfcore/random.hpp"
#include "hopfcore/report.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfcore {

struct GrGenerators {
  GeneratorSet gens;
  std::vector<Vector> gr_vectors;  // z_λ in gr coordinates, by generator position
};

// Minimal homogeneous generators of gr, degree by degree, as pivot-greedy
// complements of the decomposables. `order`, if given, permutes generators
// within each degree by id. Throws NotPolynomial when the Hilbert counts of
// the generated polynomial algebra disagree with gr.
GrGenerators extract_generators(const FilteredBialgebra& gr,
                                const std::optional<std::vector<std::string>>& order = {});

// e_λ = j⁻¹(z_λ), in raw coordinates.
std::vector<Vector> lift_generators(const GradedSplitting& split, const GrGenerators& g);

struct PbwTerm {
  MultiIndex left;
  MultiIndex right;
  Rational coeff;
};

struct StructureConstant {
  Rational c;                 // ∏ (n+m)(λ)! / (n(λ)! m(λ)!)
  Rational measured;          // coefficient of e_{n+m} in e_n e_m
  Vector defect;              // e_n e_m - c e_{n+m}, raw coordinates
  bool defect_in_lower;       // defect ∈ H_{|n+m|-1}
};

// The PBW basis e_n of a connected bialgebra and the change of basis to it.
class PbwStructure {
public:
  static std::shared_ptr<const PbwStructure>
  build(std::shared_ptr<const FilteredBialgebra> h, const CoradicalFiltration& filt,
        const GradedSplitting& split, const FilteredBialgebra& gr,
        const std::optional<std::vector<std::string>>& order = {});

  const FilteredBialgebra& bialgebra() const noexcept { return *h_; }
  const GeneratorSet& gens() const noexcept { return gens_; }
  unsigned degree_bound() const noexcept { return h_->degree_bound(); }
  const std::vector<Vector>& lifts() const noexcept { return lifts_; }
  const std::vector<Vector>& gr_vectors() const noexcept { return gr_vectors_; }

  // All n with |n| ≤ D in ascending order; position = index in this list.
  const std::vector<MultiIndex>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  std::size_t position(const MultiIndex& n) const;
  // e_n in raw coordinates. Throws TruncationError if |n| > D.
  const Vector& monomial(const MultiIndex& n) const;
  const Vector& monomial_at(std::size_t pos) const { return e_[pos]; }
  // Raw → PBW coordinates.
  Vector to_pbw(std::span<const Rational> raw) const { return to_pbw_ * raw; }
  Vector from_pbw(std::span<const Rational> coords) const { return from_pbw_ * coords; }
  // Matrix of {e_m : |m| ≤ n} in the echelon basis of H_n.
  const QMatrix& basis_change(unsigned n) const { return basis_change_.at(n); }

  // Structural checks. verify_basis throws BasisDefect on failure.
  Report verify_basis(unsigned n) const;
  // π_{|λ|}(e_λ) = z_λ and π_{|n|}(e_n) = z_n for all n.
  const Report& lift_report() const noexcept { return lift_report_; }
  StructureConstant structure_constant(const MultiIndex& n, const MultiIndex& m) const;
  // Δ(e_n) in the PBW⊗PBW basis, sorted by (position(left), position(right)).
  std::vector<PbwTerm> expand_comult(const MultiIndex& n) const;
  const kernels::ComultTable& comult_table() const noexcept { return comult_table_; }
  Report check_tech1(const MultiIndex& n) const;
  // Throws Tech1Violation naming the first offending term.
  void require_tech1(const MultiIndex& n) const;
  // H^{≤n} H^{≤m} ⊆ H^{≤n+m} on `pairs` random samples.
  Report check_prelim_closure(std::size_t pairs, Rng& rng) const;

  std::string format(const MultiIndex& n) const { return gens_.format(n); }

private:
  PbwStructure() = default;

  std::shared_ptr<const FilteredBialgebra> h_;
  std::vector<Subspace> layers_;
  GeneratorSet gens_;
  std::vector<Vector> gr_vectors_;
  std::vector<Vector> lifts_;
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, std::size_t, StructuralLess> where_;
  std::vector<Vector> e_;
  QMatrix from_pbw_;
  QMatrix to_pbw_;
  std::map<unsigned, QMatrix> basis_change_;
  kernels::ComultTable comult_table_;
  Report lift_report_;
};

} // namespace hopfcore
