#ifndef GRLIE_MATRIX_HPP
#define GRLIE_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "grlie/scalar.hpp"

namespace grlie {

/// Dense row-major matrix of exact scalars.  All entries live in one field:
/// constructing from entries of mixed cyclotomic orders embeds everything
/// into Q(zeta_lcm).
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(size_t rows, size_t cols, std::vector<Scalar> entries);

  static Matrix identity(size_t n);
  static Matrix from_rows(size_t cols, const std::vector<std::vector<Scalar>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const Scalar& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
  void set(size_t i, size_t j, Scalar v);

  std::vector<Scalar> row(size_t i) const;
  void set_row(size_t i, const std::vector<Scalar>& v);

  /// Common ambient order of the entries (1 when all rational).
  unsigned field_order() const { return order_; }

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& c) const;
  Matrix pow(unsigned long e) const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // this * v

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;  // diagnostics

private:
  void recompute_order();

  size_t rows_, cols_;
  std::vector<Scalar> entries_;
  unsigned order_ = 1;
};

}  // namespace grlie

#endif
