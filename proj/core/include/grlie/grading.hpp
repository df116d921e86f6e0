#ifndef GRLIE_GRADING_HPP
#define GRLIE_GRADING_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "grlie/group.hpp"
#include "grlie/lie_algebra.hpp"

namespace grlie {

class Grading;
using GradingPtr = std::shared_ptr<const Grading>;

/// A G-grading of a Lie algebra presented on a homogeneous basis: every basis
/// vector carries a degree, and validation checks that each bracket [b_i,b_j]
/// lies in the single component of degree deg(i)*deg(j).
class Grading {
public:
  /// Throws PreconditionError with the offending pair and stray component
  /// when the containment fails.
  static GradingPtr validate(AlgebraPtr algebra, GroupPtr group, std::vector<int> degrees);
  /// All degrees at the identity.
  static GradingPtr trivial(AlgebraPtr algebra, GroupPtr group);

  const AlgebraPtr& algebra() const { return algebra_; }
  const GroupPtr& group() const { return group_; }
  int degree_of_basis(size_t i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// Coordinate indices of the fiber L_g (possibly empty).
  std::vector<size_t> fiber_coordinates(int g) const;
  Subspace fiber(int g) const;
  /// Sorted element indices with nonzero fiber.
  std::vector<int> support() const;

  /// Degree of a homogeneous vector (its support lies in one fiber);
  /// nullopt for zero or non-homogeneous vectors.
  std::optional<int> degree_of(const Vector& v) const;

private:
  Grading() = default;
  AlgebraPtr algebra_;
  GroupPtr group_;
  std::vector<int> degrees_;
};

/// A subspace together with its fiber decomposition V = (+)_g (V cap L_g).
class GradedSubspace {
public:
  GradedSubspace(GradingPtr grading, std::map<int, Subspace> components);

  const GradingPtr& grading() const { return grading_; }
  const std::map<int, Subspace>& components() const { return components_; }
  const Subspace& component(int g) const;
  const Subspace& total() const { return total_; }
  size_t dim() const { return total_.dim(); }

  /// Sorted element indices with nonzero component.
  std::vector<int> support() const;

  /// Homogeneous basis: per-fiber canonical bases, fibers in element order.
  struct HomogeneousBasis {
    Matrix rows;               // one homogeneous vector per row
    std::vector<int> degrees;  // degree of each row
  };
  HomogeneousBasis homogeneous_basis() const;

private:
  GradingPtr grading_;
  std::map<int, Subspace> components_;  // nonzero components only
  Subspace total_;
};

struct GradedSubspaceCheck {
  bool graded = false;
  std::optional<GradedSubspace> decomposition;  // present when graded
};

/// Projects V onto every fiber; graded iff the projections sum back to V.
GradedSubspaceCheck is_graded_subspace(const Subspace& v, const GradingPtr& gr);

/// Smallest graded subspace containing V (the span of all fiber projections).
Subspace graded_closure(const Subspace& v, const GradingPtr& gr);

/// Left-normed product [L_{g_1},...,L_{g_m}].
Subspace chain_product(const GradingPtr& gr, const std::vector<int>& degrees);

struct Lemma1Result {
  bool passed = true;
  size_t nonzero_chains = 0;  // chains of length >= 2 with nonzero product
  unsigned max_length = 0;
  std::vector<int> counterexample;          // offending degree tuple when failed
  std::pair<int, int> witness = {-1, -1};   // noncommuting pair inside it
};

/// Enumerates degree tuples over the support up to length m_max (pruning as
/// soon as the running product is zero) and asserts pairwise commutation for
/// every nonzero chain.  A counterexample means invalid input, not a
/// mathematical discovery.
Lemma1Result check_lemma1(const GradingPtr& gr, unsigned m_max);

struct Lemma2Result {
  bool holds = false;
  Subspace ideal_g{0}, ideal_h{0}, product{0};
};

/// For a noncommuting support pair: [Id(L_g), Id(L_h)] must vanish.
Lemma2Result check_lemma2(const GradingPtr& gr, int g, int h);

/// Spinning with homogeneous seeds; the result is an ideal and graded.
GradedSubspace graded_ideal_generated(const GradingPtr& gr, const std::vector<Vector>& seeds);

struct GradedSimpleResult {
  bool graded_simple = false;
  std::string reason;
  size_t block_count = 0;  // meaningful in the semisimple case
};

GradedSimpleResult is_graded_simple(const GradingPtr& gr);

}  // namespace grlie

#endif
