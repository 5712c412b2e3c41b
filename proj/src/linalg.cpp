#include "hopfcore/linalg.hpp"

#include "hopfcore/errors.hpp"

#include <cassert>

namespace hopfcore {

Echelon row_reduce(QMatrix m, Exec exec) {
  const bool parallel = kernels::use_parallel(exec, m.rows() * m.cols());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0)
      ++p;
    if (p == m.rows())
      continue;
    m.swap_rows(p, r);
    if (m(r, c) != 1) {
      Rational inv = 1 / m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(r, k)) != 0)
          m(r, k) *= inv;
    }
    if (parallel)
      kernels::eliminate_parallel(m, r, c);
    else
      kernels::eliminate_serial(m, r, c);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

QMatrix rref(const QMatrix& m, Exec exec) { return row_reduce(m, exec).reduced; }

std::size_t rank(const QMatrix& m) { return row_reduce(m).rank(); }

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols())
    return std::nullopt;
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1)
    return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::span<const Vector> vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  if (vectors.empty())
    return s;
  Echelon e = row_reduce(QMatrix::from_rows(vectors, ambient_dim));
  e.reduced.truncate_rows(e.rank());
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = QMatrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i)
    s.pivots_.push_back(i);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    out.push_back(basis_.row_vector(i));
  return out;
}

Vector Subspace::residual(std::span<const Rational> v) const {
  assert(v.size() == ambient_dim_);
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational coeff = r[pivots_[i]];
    if (sgn(coeff) != 0)
      axpy(r, -coeff, basis_.row(i));
  }
  return r;
}

bool Subspace::contains(std::span<const Rational> v) const {
  return is_zero(residual(v));
}

bool Subspace::contains(const Subspace& other) const {
  assert(other.ambient_dim_ == ambient_dim_);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i)))
      return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v))
    return std::nullopt;
  Vector c(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::operator+(const Subspace& other) const {
  assert(other.ambient_dim_ == ambient_dim_);
  std::vector<Vector> rows = basis_vectors();
  for (auto& v : other.basis_vectors())
    rows.push_back(std::move(v));
  return span(rows, ambient_dim_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // The annihilator of the intersection is the sum of the annihilators.
  QMatrix a = annihilator(*this);
  QMatrix b = annihilator(other);
  for (std::size_t i = 0; i < b.rows(); ++i)
    a.append_row(b.row(i));
  return kernel(a);
}

Subspace kernel(const QMatrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, m.cols());
}

QMatrix annihilator(const Subspace& s) {
  Subspace ann = kernel(s.basis());
  return ann.basis();
}

Subspace complement(const Subspace& inner, const Subspace& outer,
                    const std::optional<Vector>& constraint,
                    const std::optional<Vector>& anchor) {
  if (inner.ambient_dim() != outer.ambient_dim() || !outer.contains(inner))
    throw InnerNotContained("complement: inner subspace is not contained in outer");

  std::vector<Vector> chosen;
  Subspace acc = inner;
  for (std::size_t i = 0; i < outer.dim() && acc.dim() < outer.dim(); ++i) {
    Vector row = outer.basis_vector(i);
    if (acc.contains(row))
      continue;
    std::vector<Vector> one{row};
    acc = acc + Subspace::span(one, outer.ambient_dim());
    chosen.push_back(std::move(row));
  }

  if (constraint) {
    std::optional<Vector> pivot_vector;
    if (anchor && inner.contains(*anchor) && sgn(dot(*constraint, *anchor)) != 0) {
      pivot_vector = *anchor;
    } else {
      for (std::size_t i = 0; i < inner.dim(); ++i) {
        if (sgn(dot(*constraint, inner.basis().row(i))) != 0) {
          pivot_vector = inner.basis_vector(i);
          break;
        }
      }
    }
    for (auto& w : chosen) {
      Rational fw = dot(*constraint, w);
      if (sgn(fw) == 0)
        continue;
      if (!pivot_vector)
        throw ConstraintUnsatisfiable(
            "complement: constraint is nonzero on outer but vanishes on inner");
      axpy(w, -fw / dot(*constraint, *pivot_vector), *pivot_vector);
    }
  }
  return Subspace::span(chosen, outer.ambient_dim());
}

} // namespace hopfcore
