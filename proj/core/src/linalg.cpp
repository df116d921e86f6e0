#include "grlie/linalg.hpp"

#include <algorithm>

#include "grlie/errors.hpp"

namespace grlie {

RrefResult rref(const Matrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<Vector> a(rows);
  for (size_t i = 0; i < rows; ++i) a[i] = m.row(i);
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i) {
      if (!a[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    const Scalar inv = a[r][c].inverse();
    for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {Matrix::from_rows(cols, a), std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
  const auto red = rref(m);
  const size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Scalar(0));
    v[f] = Scalar(1);
    for (size_t r = 0; r < red.pivots.size(); ++r) {
      v[red.pivots[r]] = -red.reduced.at(r, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw PreconditionError("solve: rhs length does not match rows");
  const size_t cols = m.cols();
  Matrix aug(m.rows(), cols + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < cols; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, cols, rhs[i]);
  }
  const auto red = rref(aug);
  for (size_t p : red.pivots) {
    if (p == cols) return std::nullopt;  // pivot in the rhs column
  }
  Vector x(cols, Scalar(0));
  for (size_t r = 0; r < red.pivots.size(); ++r) {
    x[red.pivots[r]] = red.reduced.at(r, cols);
  }
  return x;
}

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const size_t n = m.rows();
  std::vector<Vector> a(n);
  for (size_t i = 0; i < n; ++i) a[i] = m.row(i);
  Scalar d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t sel = n;
    for (size_t i = c; i < n; ++i) {
      if (!a[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == n) return Scalar(0);
    if (sel != c) {
      std::swap(a[sel], a[c]);
      d = -d;
    }
    d *= a[c][c];
    const Scalar inv = a[c][c].inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar f = a[i][c] * inv;
      for (size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  return d;
}

Vector scaled(const Vector& v, const Scalar& c) {
  Vector out = v;
  for (auto& x : out) x *= c;
  return out;
}

Vector added(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
  Vector out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector negated(const Vector& v) {
  Vector out = v;
  for (auto& x : out) x = -x;
  return out;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Vector IncrementalSpan::reduce(Vector v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Scalar f = c;
    for (size_t j = 0; j < ambient_; ++j) {
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
  }
  return v;
}

bool IncrementalSpan::insert(Vector v) {
  if (v.size() != ambient_) throw PreconditionError("vector length mismatch in span insert");
  v = reduce(std::move(v));
  size_t pivot = ambient_;
  for (size_t j = 0; j < ambient_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == ambient_) return false;
  const Scalar inv = v[pivot].inverse();
  for (auto& x : v) x *= inv;
  // Back-substitute into existing rows to stay fully reduced.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = rows_[r][pivot];
    if (c.is_zero()) continue;
    for (size_t j = 0; j < ambient_; ++j) rows_[r][j] -= c * v[j];
  }
  // Keep pivot order increasing.
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<long>(pos), pivot);
  return true;
}

bool IncrementalSpan::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

Matrix IncrementalSpan::to_matrix() const { return Matrix::from_rows(ambient_, rows_); }

Subspace Subspace::span(size_t ambient, const std::vector<Vector>& vectors) {
  IncrementalSpan inc(ambient);
  for (const auto& v : vectors) inc.insert(v);
  Subspace s(ambient);
  s.basis_ = inc.to_matrix();
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return span(m.cols(), rows);
}

Subspace Subspace::full(size_t ambient) { return row_space(Matrix::identity(ambient)); }

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(basis_.rows());
  for (size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  IncrementalSpan inc(ambient_);
  for (size_t i = 0; i < basis_.rows(); ++i) inc.insert(basis_.row(i));
  return inc.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw PreconditionError("ambient dimension mismatch");
  IncrementalSpan inc(ambient_);
  for (size_t i = 0; i < basis_.rows(); ++i) inc.insert(basis_.row(i));
  for (size_t i = 0; i < other.basis_.rows(); ++i) {
    if (!inc.contains(other.basis_.row(i))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw PreconditionError("ambient dimension mismatch");
  auto vectors = basis_vectors();
  for (const auto& v : other.basis_vectors()) vectors.push_back(v);
  return span(ambient_, vectors);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw PreconditionError("ambient dimension mismatch");
  const size_t a = dim(), b = other.dim();
  if (a == 0 || b == 0) return Subspace(ambient_);
  // Solve alpha^T A = beta^T B: kernel of [A^T | -B^T].
  Matrix m(ambient_, a + b);
  for (size_t i = 0; i < ambient_; ++i) {
    for (size_t j = 0; j < a; ++j) m.set(i, j, basis_.at(j, i));
    for (size_t j = 0; j < b; ++j) m.set(i, a + j, -other.basis_.at(j, i));
  }
  std::vector<Vector> vectors;
  for (const auto& k : kernel(m)) {
    Vector v(ambient_, Scalar(0));
    for (size_t j = 0; j < a; ++j) {
      if (k[j].is_zero()) continue;
      for (size_t i = 0; i < ambient_; ++i) v[i] += k[j] * basis_.at(j, i);
    }
    vectors.push_back(std::move(v));
  }
  return span(ambient_, vectors);
}

Subspace Subspace::complement_within(const Subspace& enclosing) const {
  if (enclosing.ambient_ != ambient_) throw PreconditionError("ambient dimension mismatch");
  if (!enclosing.contains(*this)) {
    throw PreconditionError("complement_within: enclosing space does not contain the subspace");
  }
  IncrementalSpan inc(ambient_);
  for (size_t i = 0; i < basis_.rows(); ++i) inc.insert(basis_.row(i));
  std::vector<Vector> chosen;
  for (size_t i = 0; i < enclosing.basis_.rows(); ++i) {
    Vector v = enclosing.basis_.row(i);
    if (inc.insert(v)) chosen.push_back(std::move(v));
  }
  return span(ambient_, chosen);
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != ambient_) throw PreconditionError("map shape does not match ambient dimension");
  std::vector<Vector> vectors;
  vectors.reserve(dim());
  for (size_t i = 0; i < basis_.rows(); ++i) vectors.push_back(m.apply(basis_.row(i)));
  return span(m.rows(), vectors);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

}  // namespace grlie
