#pragma once

#include "hopfcore/kernels.hpp"
#include "hopfcore/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hopfcore {

struct Echelon {
  QMatrix reduced;                  // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon row_reduce(QMatrix m, Exec exec = Exec::automatic);
QMatrix rref(const QMatrix& m, Exec exec = Exec::automatic);
std::size_t rank(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);

// A linear subspace of Q^n held as the nonzero rows of its reduced row
// echelon basis, so equal subspaces compare equal.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const QMatrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // v reduced against the basis; zero iff v lies in the subspace.
  Vector residual(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in basis(), if v lies in the subspace.
  std::optional<Vector> coordinates(std::span<const Rational> v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

private:
  std::size_t ambient_dim_;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// {v : m v = 0}
Subspace kernel(const QMatrix& m);

// Functionals vanishing on s, as the rows of a matrix; its kernel is s.
QMatrix annihilator(const Subspace& s);

// W with inner ⊕ W = outer. W is built pivot-greedily from outer's basis
// rows in order. With a constraint functional f, every violating vector w
// is replaced by w - (f(w)/f(a)) a where a is the anchor (or, without one,
// the first basis row of inner with f(a) != 0); a must lie in inner.
// Throws InnerNotContained, ConstraintUnsatisfiable.
Subspace complement(const Subspace& inner, const Subspace& outer,
                    const std::optional<Vector>& constraint = std::nullopt,
                    const std::optional<Vector>& anchor = std::nullopt);

} // namespace hopfcore
