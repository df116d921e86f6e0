#include "grlie/matrix.hpp"

#include <numeric>
#include <sstream>

#include "grlie/errors.hpp"

namespace grlie {

Matrix::Matrix(size_t rows, size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw PreconditionError("matrix entry count does not match dimensions");
  }
  recompute_order();
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar(1);
  return m;
}

void Matrix::recompute_order() {
  order_ = 1;
  for (const auto& e : entries_) order_ = common_cyclotomic_order(order_, e.field_order());
  if (order_ > 1) {
    for (auto& e : entries_) e = e.in_order(order_);
  }
}

void Matrix::set(size_t i, size_t j, Scalar v) {
  const unsigned order = common_cyclotomic_order(order_, v.field_order());
  if (order != order_) {
    order_ = order;
    for (auto& e : entries_) e = e.in_order(order_);
  }
  entries_[i * cols_ + j] = (order_ > 1) ? v.in_order(order_) : std::move(v);
}

std::vector<Scalar> Matrix::row(size_t i) const {
  return {entries_.begin() + static_cast<long>(i * cols_),
          entries_.begin() + static_cast<long>((i + 1) * cols_)};
}

void Matrix::set_row(size_t i, const std::vector<Scalar>& v) {
  if (v.size() != cols_) throw PreconditionError("row length mismatch");
  for (size_t j = 0; j < cols_; ++j) set(i, j, v[j]);
}

Matrix Matrix::from_rows(size_t cols, const std::vector<std::vector<Scalar>>& rows) {
  std::vector<Scalar> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw PreconditionError("row length mismatch");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(flat));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
  }
  t.order_ = order_;
  return t;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw PreconditionError("trace of a non-square matrix");
  Scalar t(0);
  for (size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch in +");
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
  r.recompute_order();
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch in -");
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
  r.recompute_order();
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix shape mismatch in *");
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.entries_[i * o.cols_ + j] += a * b;
      }
    }
  }
  r.recompute_order();
  return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * c;
  r.recompute_order();
  return r;
}

Matrix Matrix::pow(unsigned long e) const {
  if (rows_ != cols_) throw PreconditionError("power of a non-square matrix");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return result;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw PreconditionError("vector length mismatch in matrix apply");
  std::vector<Scalar> out(rows_, Scalar(0));
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t k = 0; k < a.entries_.size(); ++k) {
    if (a.entries_[k] != b.entries_[k]) return false;
  }
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (size_t j = 0; j < cols_; ++j) os << (j ? ", " : "[") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

}  // namespace grlie
