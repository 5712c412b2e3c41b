#include "hopfcore/matrix.hpp"

#include <cassert>
#include <utility>

namespace hopfcore {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (sgn(x) != 0)
      return false;
  return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  assert(a.size() == b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
      s += a[i] * b[i];
  return s;
}

void axpy(std::span<Rational> y, const Rational& s, std::span<const Rational> x) {
  assert(y.size() == x.size());
  if (sgn(s) == 0)
    return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0)
      y[i] += s * x[i];
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, Rational(1), b);
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, Rational(-1), b);
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  if (sgn(s) == 0)
    return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0)
      r[i] = s * v[i];
  return r;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    assert(columns[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

Vector QMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector QMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

void QMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void QMatrix::append_row(std::span<const Rational> r) {
  assert(r.size() == cols_);
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void QMatrix::truncate_rows(std::size_t n) {
  if (n >= rows_)
    return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const { return hopfcore::is_zero(data_); }

QMatrix& QMatrix::operator+=(const QMatrix& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(other.data_[i]) != 0)
      data_[i] += other.data_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(other.data_[i]) != 0)
      data_[i] -= other.data_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& x : data_)
    if (sgn(x) != 0)
      x *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  assert(a.cols() == b.rows());
  QMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0)
          p(i, j) += aik * b(k, j);
    }
  return p;
}

Vector operator*(const QMatrix& m, std::span<const Rational> v) {
  assert(m.cols() == v.size());
  Vector r(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sgn(v[c]) == 0)
      continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (sgn(m(i, c)) != 0)
        r[i] += m(i, c) * v[c];
  }
  return r;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }

void add_outer(QMatrix& t, const Rational& s, std::span<const Rational> a,
               std::span<const Rational> b) {
  assert(t.rows() == a.size() && t.cols() == b.size());
  if (sgn(s) == 0)
    return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0)
      continue;
    Rational sa = s * a[i];
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0)
        t(i, j) += sa * b[j];
  }
}

} // namespace hopfcore
