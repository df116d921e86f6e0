#ifndef GRLIE_GROUP_HPP
#define GRLIE_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

#include "grlie/cyclotomic.hpp"

namespace grlie {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Order cap for group constructors (spec default 64).
unsigned max_group_order();
void set_max_group_order(unsigned bound);

/// Finite group given by a validated Cayley table over named elements.
/// Immutable after construction.
class FiniteGroup {
public:
  static GroupPtr cyclic(unsigned n);
  static GroupPtr dihedral(unsigned n);
  static GroupPtr symmetric(unsigned n);  // n <= 4
  static GroupPtr product(const GroupPtr& a, const GroupPtr& b);
  /// Full validation: Latin square, identity, inverses, associativity.
  static GroupPtr from_table(std::vector<std::string> elements,
                             std::vector<std::vector<int>> table);

  size_t order() const { return names_.size(); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverses_[a]; }
  int power(int a, long e) const;
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  /// Index of a named element; throws PreconditionError when unknown.
  int index_of(const std::string& name) const;

  unsigned element_order(int a) const { return element_orders_[a]; }
  unsigned exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  /// Closure of the given elements under products (contains the identity);
  /// returned sorted by index.
  std::vector<int> subgroup_generated(const std::vector<int>& generators) const;

  struct CommutativityReport {
    bool commutative = true;
    int witness_a = -1, witness_b = -1;  // a pair with ab != ba when not
  };
  CommutativityReport commutativity(const std::vector<int>& subset) const;

  /// The given closed subset as a standalone group; to_parent maps the new
  /// indices back into this group.
  struct Subgroup {
    GroupPtr group;
    std::vector<int> to_parent;
  };
  Subgroup subgroup_as_group(const std::vector<int>& elements) const;

private:
  FiniteGroup() = default;
  static GroupPtr finalize(std::vector<std::string> names, std::vector<std::vector<int>> table);

  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;
  std::vector<unsigned> element_orders_;
  int identity_ = 0;
  unsigned exponent_ = 1;
  bool abelian_ = true;
};

/// Element handle used by set-valued operations; only meaningful together
/// with the group it came from.
struct GroupElement {
  const FiniteGroup* group = nullptr;
  int index = -1;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.group == b.group && a.index == b.index;
  }
};

/// Irreducible character of a finite abelian group; values are roots of unity
/// in Q(zeta_exponent).
class Character {
public:
  Character(const FiniteGroup* group, std::string name, std::vector<Cyclotomic> values)
      : group_(group), name_(std::move(name)), values_(std::move(values)) {}

  const FiniteGroup* group() const { return group_; }
  const std::string& name() const { return name_; }
  const Cyclotomic& value(int element) const { return values_[static_cast<size_t>(element)]; }
  const std::vector<Cyclotomic>& values() const { return values_; }

private:
  const FiniteGroup* group_;
  std::string name_;
  std::vector<Cyclotomic> values_;
};

/// The dual group of a finite abelian group: all |G| irreducible characters,
/// built from an invariant-factor decomposition G = Z_{d_1} x ... x Z_{d_k}
/// (d_{i+1} | d_i).  Character i corresponds to the i-th exponent tuple in
/// lexicographic order; "chi0" is the trivial character.
class DualGroup {
public:
  /// Precondition: g abelian.
  static DualGroup of(const GroupPtr& g);

  const GroupPtr& group() const { return group_; }
  size_t size() const { return characters_.size(); }
  const std::vector<Character>& characters() const { return characters_; }
  const Character& at(size_t i) const { return characters_[i]; }
  const Character& by_name(const std::string& name) const;

  /// Index of the pointwise product of two characters.
  size_t product(size_t a, size_t b) const;
  size_t inverse(size_t a) const;
  /// Order of a character under pointwise product.
  unsigned character_order(size_t a) const;

  /// Indices of the coordinate characters (one per invariant factor); they
  /// generate the dual group.
  const std::vector<size_t>& generator_indices() const { return generator_indices_; }

  const std::vector<unsigned>& invariant_factors() const { return factors_; }
  /// Group elements realizing the decomposition (g_i of order d_i).
  const std::vector<int>& group_generators() const { return group_generators_; }

private:
  GroupPtr group_;
  std::vector<Character> characters_;
  std::vector<unsigned> factors_;
  std::vector<int> group_generators_;
  std::vector<size_t> generator_indices_;
  std::vector<std::vector<unsigned>> tuples_;  // character index -> exponent tuple
};

}  // namespace grlie

#endif
