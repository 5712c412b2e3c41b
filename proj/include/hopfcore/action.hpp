#pragma once

#include "hopfcore/algebra.hpp"
#include "hopfcore/convolution.hpp"
#include "hopfcore/linalg.hpp"
#include "hopfcore/pbw.hpp"
#include "hopfcore/report.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfcore {

// Σ coeff · x^mul · ∂^diff, exponents by variable position.
struct DiffTerm {
  Rational coeff;
  std::vector<std::uint32_t> mul;
  std::vector<std::uint32_t> diff;
};

// The algebra being acted on: finite-dimensional, or a polynomial ring
// truncated at total degree E (products beyond E are undefined).
class DeskAlgebra : public TableAlgebra {
public:
  DeskAlgebra() = default;
  // A finite-dimensional algebra.
  explicit DeskAlgebra(TableAlgebra algebra) : TableAlgebra(std::move(algebra)) {}

  // Monomials of degree ≤ E, by degree, then by descending exponent of the
  // first variable, then the next.
  static DeskAlgebra polynomial(std::vector<std::string> variables, unsigned E);

  bool is_polynomial() const noexcept { return polynomial_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  unsigned degree_bound() const noexcept { return E_; }
  const std::vector<std::vector<std::uint32_t>>& exponents() const noexcept { return exps_; }
  std::optional<std::size_t> index_of(const std::vector<std::uint32_t>& exps) const;
  // Degree of basis element i (0 for every element of a finite algebra).
  unsigned degree(std::size_t i) const { return polynomial_ ? degrees()[i] : 0; }

  // Throws TruncationError if the operator raises some basis monomial
  // beyond E, FormatError if not polynomial.
  QMatrix differential_operator(const std::vector<DiffTerm>& terms) const;

private:
  bool polynomial_ = false;
  std::vector<std::string> variables_;
  unsigned E_ = 0;
  std::vector<std::vector<std::uint32_t>> exps_;
};

enum class IdealKind { subspace, monomial, principal, zero, whole };
const char* ideal_kind_name(IdealKind k);

// Ideal I of A, held as the subspace I ∩ A (within truncation), with normal
// forms on the complementary standard basis. Normal forms are computed with
// higher-degree basis elements eliminated first, so they never raise degree.
class IdealOracle {
public:
  // Throws FormatError when the span is not a two-sided ideal (checked on
  // every defined product with a basis element).
  static IdealOracle subspace(std::shared_ptr<const DeskAlgebra> A, std::vector<Vector> span);
  // Generated by monomials, by exponent vectors.
  static IdealOracle monomial(std::shared_ptr<const DeskAlgebra> A,
                              const std::vector<std::vector<std::uint32_t>>& generators);
  static IdealOracle principal(std::shared_ptr<const DeskAlgebra> A, const Vector& g);
  static IdealOracle zero(std::shared_ptr<const DeskAlgebra> A);
  static IdealOracle whole(std::shared_ptr<const DeskAlgebra> A);

  IdealKind kind() const noexcept { return kind_; }
  const DeskAlgebra& algebra() const noexcept { return *A_; }
  const Subspace& space() const noexcept { return space_; }
  bool is_whole() const noexcept { return space_.dim() == A_->dim(); }
  bool contains(std::span<const Rational> a) const { return space_.contains(a); }

  // Indices of the standard basis elements spanning A/I.
  const std::vector<std::size_t>& standard() const noexcept { return standard_; }
  // Coordinates of a + I on the standard basis.
  Vector project(std::span<const Rational> a) const;
  // The standard representative in A of quotient coordinates.
  Vector lift(std::span<const Rational> q) const;
  // A/I with its partial multiplication.
  const std::shared_ptr<const CoefficientRing>& quotient() const noexcept { return quotient_; }

  // Closure under addition (by construction) and multiplication by basis
  // elements on both sides, within truncation.
  Report check_ideal() const;

private:
  IdealOracle(IdealKind kind, std::shared_ptr<const DeskAlgebra> A, Subspace space);

  IdealKind kind_;
  std::shared_ptr<const DeskAlgebra> A_;
  Subspace space_;
  std::vector<std::size_t> order_;    // elimination order: degree descending
  std::vector<std::size_t> standard_;
  QMatrix reduced_;                   // echelon basis in elimination order
  std::vector<std::size_t> pivots_;   // pivot columns in elimination order
  std::shared_ptr<const CoefficientRing> quotient_;
};

// Left action of the PBW host on A through operators for the generators.
class ModuleAlgebraAction {
public:
  // gen_ops keyed by generator id; every generator needs an operator.
  ModuleAlgebraAction(std::shared_ptr<const PbwStructure> host,
                      std::shared_ptr<const DeskAlgebra> A, std::map<std::string, QMatrix> gen_ops);

  const PbwStructure& host() const noexcept { return *host_; }
  const std::shared_ptr<const PbwStructure>& host_ptr() const noexcept { return host_; }
  const DeskAlgebra& algebra() const noexcept { return *A_; }
  const std::shared_ptr<const DeskAlgebra>& algebra_ptr() const noexcept { return A_; }
  // The operator of e_n = ∏^< e_λ^{n(λ)}/n(λ)!, by PBW position.
  const QMatrix& op(std::size_t pos) const { return ops_[pos]; }
  Vector act(const MultiIndex& n, std::span<const Rational> a) const;

  // op(e_λ)op(e_m) = Σ c_k op(e_k) where e_λ e_m = Σ c_k e_k, |λ|+|m| ≤ D.
  Report verify_module() const;
  // e_n.(ab) = Σ c (e_i.a)(e_j.b) over Δ(e_n), and e_n.1 = ε(e_n)1.
  Report verify_module_algebra() const;

private:
  std::shared_ptr<const PbwStructure> host_;
  std::shared_ptr<const DeskAlgebra> A_;
  std::vector<QMatrix> ops_;
};

// n ↦ e_n.a + I over R = A/I.
ConvElement rho(const ModuleAlgebraAction& act, const IdealOracle& ideal,
                std::span<const Rational> a);

struct HCore {
  Subspace core;                        // inside A, at the largest cap
  std::vector<std::size_t> dims_by_cap; // dim of the core using |n| ≤ c, c = 0..D
  bool stabilized = false;              // unchanged from cap D-1 to D
  std::optional<unsigned> stable_from;  // smallest c with constant dims on [c, D]
};

// {a ∈ A_{≤d_A} : e_n.a ∈ I for all |n| ≤ D}. Throws TruncationError if D
// exceeds the host bound.
HCore hcore(const ModuleAlgebraAction& act, const IdealOracle& ideal, unsigned d_A, unsigned D);

enum class ProbeMode { prime, semiprime, domain };
const char* probe_mode_name(ProbeMode m);

// Probes A/(I:H) through ρ: pairs of basis elements of degree ≤ bound that
// lie outside the core. Domain mode checks ρ(a)∗ρ(b) ≠ 0; prime and
// semiprime modes build witnesses with u = ρ(lift r).
Report core_primeness_probe(const ModuleAlgebraAction& act, const Subspace& core,
                            const IdealOracle& ideal, ProbeMode mode, unsigned bound);

} // namespace hopfcore
