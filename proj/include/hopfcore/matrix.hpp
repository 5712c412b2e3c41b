#pragma once

#include "hopfcore/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hopfcore {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
// y += s * x
void axpy(std::span<Rational> y, const Rational& s, std::span<const Rational> x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

// Dense row-major matrix of rationals.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static QMatrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void append_row(std::span<const Rational> r);
  // Keeps the first n rows.
  void truncate_rows(std::size_t n);

  QMatrix transpose() const;
  bool is_zero() const;

  QMatrix& operator+=(const QMatrix& other);
  QMatrix& operator-=(const QMatrix& other);
  QMatrix& operator*=(const Rational& s);

  bool operator==(const QMatrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
Vector operator*(const QMatrix& m, std::span<const Rational> v);
QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);

// Outer-product accumulation t += s * (a ⊗ b), skipping zero entries.
void add_outer(QMatrix& t, const Rational& s, std::span<const Rational> a,
               std::span<const Rational> b);

} // namespace hopfcore
