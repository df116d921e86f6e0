#ifndef GRLIE_LIE_ALGEBRA_HPP
#define GRLIE_LIE_ALGEBRA_HPP

#include <memory>
#include <string>
#include <vector>

#include "grlie/linalg.hpp"

namespace grlie {

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Finite-dimensional Lie algebra over an exact field, given by structure
/// constants on a named basis.  The constructor verifies antisymmetry and the
/// Jacobi identity on all basis triples; instances are immutable.
class LieAlgebra {
public:
  /// constants[i][j] = coordinate vector of [b_i, b_j].
  static AlgebraPtr create(std::vector<std::string> basis,
                           std::vector<std::vector<Vector>> constants);

  size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vector& basis_bracket(size_t i, size_t j) const { return constants_[i][j]; }
  unsigned field_order() const { return order_; }

  Vector basis_vector(size_t i) const {
    Vector v(dim(), Scalar(0));
    v[i] = Scalar(1);
    return v;
  }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// [x1,...,xn] = [[x1,...,x_{n-1}],xn]; the list must be nonempty.
  Vector left_normed(const std::vector<Vector>& xs) const;
  /// Matrix of v -> [x, v].
  Matrix ad(const Vector& x) const;

  /// Span of brackets of basis pairs, canonicalized.
  Subspace product_subspace(const Subspace& v, const Subspace& w) const;
  /// Smallest ideal containing the seeds, by spinning with basis vectors.
  Subspace ideal_generated(const std::vector<Vector>& seeds) const;
  /// {x : [x,s] = 0 for all s in S}.
  Subspace centralizer(const Subspace& s) const;
  Subspace center() const;

  /// L, [L,L], [[L,L],[L,L]], ... until stabilization (strictly decreasing).
  std::vector<Subspace> derived_series() const;
  std::vector<Subspace> lower_central_series() const;
  bool is_solvable() const;
  bool is_nilpotent() const;
  /// Derived series of a subspace under this bracket reaches zero.
  bool subspace_is_solvable(const Subspace& s) const;

  /// kappa(b_i, b_j) = trace(ad b_i . ad b_j).
  const Matrix& killing_form() const;
  /// Cartan's criterion: the kappa-orthogonal complement of [L,L]; verified
  /// solvable before returning.
  Subspace radical() const;
  bool is_semisimple() const;

  /// Minimal ideals of a semisimple algebra, via centroid idempotents.
  /// Throws PreconditionError when not semisimple or when the centroid does
  /// not split over the current field.
  std::vector<Subspace> simple_decomposition() const;

  bool is_subalgebra(const Subspace& s) const;
  bool is_ideal(const Subspace& s) const;

private:
  LieAlgebra() = default;

  std::vector<std::string> names_;
  std::vector<std::vector<Vector>> constants_;
  unsigned order_ = 1;
  mutable std::shared_ptr<const Matrix> killing_;  // built once on demand
};

/// A subalgebra re-expressed as an algebra on its own basis, with coordinate
/// transport in both directions.
struct SubalgebraRestriction {
  AlgebraPtr algebra;
  Matrix rows;  // basis of the subalgebra as rows in parent coordinates

  Vector to_parent(const Vector& v_sub) const;
  Vector to_sub(const Vector& v_parent) const;  // throws when outside the span
  Subspace lift(const Subspace& s_sub) const;
};

/// Restrict to a bracket-closed subspace; names default to x0, x1, ...
SubalgebraRestriction restrict_to_subalgebra(const AlgebraPtr& parent, const Subspace& s);

/// Quotient by an ideal, realized on the canonical complement basis.
struct QuotientAlgebra {
  AlgebraPtr algebra;
  Matrix section_rows;  // quotient basis vector i as row i in parent coordinates
  Subspace ideal{0};

  Vector project(const Vector& v_parent) const;
  Vector lift(const Vector& v_quot) const;
};
QuotientAlgebra quotient_by_ideal(const AlgebraPtr& parent, const Subspace& ideal);

/// Basis of {phi : phi . ad(x) = ad(x) . phi for all x}, the centroid.
std::vector<Matrix> centroid_basis(const LieAlgebra& algebra);

struct SplitTypeResult {
  std::string label;  // "A1", "B2", ..., or "unrecognized"
  unsigned rank = 0;
  std::string detail;
};

/// Split-type classification of a simple algebra by Cartan rank, dimension
/// and (where needed) root lengths.  Returns "unrecognized" when root data
/// leaves the field.
SplitTypeResult classify_split_type(const AlgebraPtr& simple_algebra);

}  // namespace grlie

#endif
