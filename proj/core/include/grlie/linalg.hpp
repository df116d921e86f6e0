#ifndef GRLIE_LINALG_HPP
#define GRLIE_LINALG_HPP

#include <optional>
#include <vector>

#include "grlie/matrix.hpp"

namespace grlie {

using Vector = std::vector<Scalar>;

struct RrefResult {
  Matrix reduced;
  std::vector<size_t> pivots;  // strictly increasing pivot columns
};

/// Reduced row-echelon form over the exact field.
RrefResult rref(const Matrix& m);

size_t rank(const Matrix& m);

/// Canonical null-space basis: one vector per free column, in increasing
/// column order, with that free variable set to 1.
std::vector<Vector> kernel(const Matrix& m);

/// One exact solution of m x = rhs with free variables zero, or nullopt when
/// the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Determinant by fraction-full Gaussian elimination (square input).
Scalar det(const Matrix& m);

Vector scaled(const Vector& v, const Scalar& c);
Vector added(const Vector& a, const Vector& b);
Vector negated(const Vector& v);
bool is_zero_vector(const Vector& v);

/// Row-reduced spanning set maintained incrementally; rows stay in reduced
/// echelon form with pivot columns strictly increasing.
class IncrementalSpan {
public:
  explicit IncrementalSpan(size_t ambient) : ambient_(ambient) {}

  /// Returns true when v was independent of the current span (and was added).
  bool insert(Vector v);
  bool contains(const Vector& v) const;

  size_t dim() const { return rows_.size(); }
  size_t ambient() const { return ambient_; }
  const std::vector<Vector>& rows() const { return rows_; }
  Matrix to_matrix() const;

private:
  Vector reduce(Vector v) const;

  size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<size_t> pivots_;
};

/// Linear subspace in canonical form: the rref basis of its row space, so
/// equal subspaces have equal representations (up to scalar value equality).
class Subspace {
public:
  explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace full(size_t ambient);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Canonical basis, one vector per row.
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Canonical complement of *this inside enclosing: the subset of
  /// enclosing's canonical basis rows independent modulo *this.
  Subspace complement_within(const Subspace& enclosing) const;

  /// Image under the linear map v -> m * v (columns ambient-sized).
  Subspace image(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  size_t ambient_;
  Matrix basis_;
};

}  // namespace grlie

#endif
