#pragma once

#include "hopfcore/bialgebra.hpp"
#include "hopfcore/linalg.hpp"
#include "hopfcore/random.hpp"
#include "hopfcore/report.hpp"

#include <vector>

namespace hopfcore {

struct CoradicalFiltration {
  std::vector<Subspace> layers;  // C_0 ⊆ … ⊆ C_D, C_0 = span{1}
  bool exhaustive = false;
  std::vector<std::size_t> dims() const;
};

// Layers C_0..C_D; never throws on non-exhaustion.
CoradicalFiltration filtration_layers(const FilteredBialgebra& h);
// Throws NotExhaustive when C_D is not the whole space.
CoradicalFiltration coradical_filtration(const FilteredBialgebra& h);
bool check_connected(const FilteredBialgebra& h);

// H = ⊕ H(n) with H_n = ⊕_{k≤n} H(k) and ε(H(n)) = 0 for n ≥ 1, recorded
// through a basis adapted to the decomposition ("split basis").
struct GradedSplitting {
  std::vector<Subspace> components;  // H(0)..H(D)
  QMatrix basis;                     // split basis vectors as columns, raw coordinates
  QMatrix to_split;                  // basis⁻¹: the map j in coordinates
  std::vector<unsigned> degrees;     // degree of each split basis vector
  std::vector<std::string> labels;
  std::vector<QMatrix> comult;       // Δ(s_k) in split⊗split coordinates

  std::size_t dim() const noexcept { return degrees.size(); }
  Vector to_gr(std::span<const Rational> raw) const { return to_split * raw; }
  Vector from_gr(std::span<const Rational> split) const { return basis * split; }
  Vector basis_vector(std::size_t k) const { return basis.column(k); }
  // Raw → split coordinates, keeping only degree-n entries (π_n after j).
  Vector project(std::span<const Rational> raw, unsigned n) const;
  // δ(s_k): the part of Δ(s_k) in ⊕_{r+s=deg s_k} H(r)⊗H(s).
  QMatrix delta(std::size_t k) const;
  // Raw tensor → split⊗split coordinates.
  QMatrix tensor_to_split(const QMatrix& raw) const;
};

GradedSplitting graded_splitting(const CoradicalFiltration& filt, const FilteredBialgebra& h);

// gr H on the split basis, with Δ_gr = δ and the product's top-degree part.
// Throws TruncationError if a product within the bound is undefined in H.
FilteredBialgebra gr_structure(const GradedSplitting& split, const FilteredBialgebra& h);

// Algebra filtration, antipode stability, gr commutativity, and the
// coradically graded property of gr.
Report verify_gr_facts(const FilteredBialgebra& h, const GradedSplitting& split,
                       const FilteredBialgebra& gr);

// Whether a split⊗split tensor lies in Σ_{i=1}^{n-1} H_i ⊗ H_{n-i}.
bool in_filtered_tensor_sum(const std::vector<unsigned>& degrees, const QMatrix& t,
                            unsigned n);

// Δ(h) - 1⊗h - h⊗1 ∈ Σ_{i=1}^{n-1} C_i ⊗ C_{n-i} for the basis rows h of
// C_n, n ≥ 2, and of C_1 ∩ ker ε.
Report check_comH(const FilteredBialgebra& h, const CoradicalFiltration& filt,
                  const GradedSplitting& split);

// Δ(z) - δ(z) ∈ ⊕_{i+j<n} H(i)⊗H(j) for every split basis vector z of degree n.
Report check_delta_defect(const GradedSplitting& split);

// Closure of the sets 𝒫_n in gr under products and sums, on random samples.
Report check_primitive_closure(const FilteredBialgebra& gr, Rng& rng, std::size_t samples);

} // namespace hopfcore
