#include "grlie/group.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "grlie/errors.hpp"

namespace grlie {

namespace {
std::atomic<unsigned> g_max_group_order{64};
}

unsigned max_group_order() { return g_max_group_order.load(); }
void set_max_group_order(unsigned bound) { g_max_group_order.store(bound); }

GroupPtr FiniteGroup::finalize(std::vector<std::string> names, std::vector<std::vector<int>> table) {
  const size_t n = names.size();
  if (n == 0) throw PreconditionError("group must have at least one element");
  if (n > g_max_group_order.load()) {
    throw PreconditionError("group order " + std::to_string(n) + " exceeds configured bound " +
                            std::to_string(g_max_group_order.load()));
  }
  {
    std::set<std::string> distinct(names.begin(), names.end());
    if (distinct.size() != n) throw PreconditionError("group element names are not distinct");
  }
  if (table.size() != n) throw PreconditionError("Cayley table row count mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw PreconditionError("Cayley table column count mismatch");
    for (size_t j = 0; j < n; ++j) {
      if (table[i][j] < 0 || static_cast<size_t>(table[i][j]) >= n) {
        throw PreconditionError("Cayley table entry out of range at (" + names[i] + "," + names[j] + ")");
      }
    }
  }
  // Latin square: each row and column is a permutation.
  for (size_t i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (size_t j = 0; j < n; ++j) {
      if (row_seen[static_cast<size_t>(table[i][j])]) {
        throw PreconditionError("Cayley table row for " + names[i] + " repeats " +
                                names[static_cast<size_t>(table[i][j])]);
      }
      row_seen[static_cast<size_t>(table[i][j])] = true;
      if (col_seen[static_cast<size_t>(table[j][i])]) {
        throw PreconditionError("Cayley table column for " + names[i] + " repeats " +
                                names[static_cast<size_t>(table[j][i])]);
      }
      col_seen[static_cast<size_t>(table[j][i])] = true;
    }
  }
  // Identity.
  int identity = -1;
  for (size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (size_t x = 0; x < n && ok; ++x) {
      ok = table[e][x] == static_cast<int>(x) && table[x][e] == static_cast<int>(x);
    }
    if (ok) {
      identity = static_cast<int>(e);
      break;
    }
  }
  if (identity < 0) throw PreconditionError("Cayley table has no identity element");
  // Associativity on all triples.
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      for (size_t c = 0; c < n; ++c) {
        const int left = table[static_cast<size_t>(table[a][b])][c];
        const int right = table[a][static_cast<size_t>(table[b][c])];
        if (left != right) {
          throw PreconditionError("Cayley table not associative on triple (" + names[a] + "," +
                                  names[b] + "," + names[c] + ")");
        }
      }
    }
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->names_ = std::move(names);
  g->table_ = std::move(table);
  g->identity_ = identity;
  g->inverses_.assign(n, -1);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      if (g->table_[a][b] == identity) {
        g->inverses_[a] = static_cast<int>(b);
        break;
      }
    }
    if (g->inverses_[a] < 0) {
      throw PreconditionError("element " + g->names_[a] + " has no inverse");
    }
  }
  g->element_orders_.assign(n, 0);
  unsigned exponent = 1;
  for (size_t a = 0; a < n; ++a) {
    unsigned ord = 1;
    int x = static_cast<int>(a);
    while (x != identity) {
      x = g->table_[static_cast<size_t>(x)][a];
      ++ord;
    }
    g->element_orders_[a] = ord;
    exponent = std::lcm(exponent, ord);
  }
  g->exponent_ = exponent;
  g->abelian_ = true;
  for (size_t a = 0; a < n && g->abelian_; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (g->table_[a][b] != g->table_[b][a]) {
        g->abelian_ = false;
        break;
      }
    }
  }
  return g;
}

GroupPtr FiniteGroup::cyclic(unsigned n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  std::vector<std::string> names;
  names.reserve(n);
  for (unsigned i = 0; i < n; ++i) names.push_back("r" + std::to_string(i));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) table[i][j] = static_cast<int>((i + j) % n);
  }
  return finalize(std::move(names), std::move(table));
}

GroupPtr FiniteGroup::dihedral(unsigned n) {
  if (n == 0) throw PreconditionError("dihedral parameter must be positive");
  const unsigned m = 2 * n;
  // Indices 0..n-1 are rotations r^i, n..2n-1 are reflections s*r^i.
  std::vector<std::string> names;
  names.reserve(m);
  for (unsigned i = 0; i < n; ++i) names.push_back("r" + std::to_string(i));
  for (unsigned i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  auto rot = [n](unsigned i) { return static_cast<int>(i % n); };
  auto refl = [n](unsigned i) { return static_cast<int>(n + (i % n)); };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      table[i][j] = rot(i + j);                    // r^i r^j
      table[i][n + j] = refl(j + n - (i % n));     // r^i (s r^j) = s r^(j-i)
      table[n + i][j] = refl(i + j);               // (s r^i) r^j
      table[n + i][n + j] = rot(j + n - (i % n));  // (s r^i)(s r^j) = r^(j-i)
    }
  }
  return finalize(std::move(names), std::move(table));
}

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> used(perm.size(), false);
  std::ostringstream os;
  bool any = false;
  for (int s = 0; s < n; ++s) {
    if (used[static_cast<size_t>(s)] || perm[static_cast<size_t>(s)] == s) continue;
    os << "(";
    int x = s;
    while (!used[static_cast<size_t>(x)]) {
      used[static_cast<size_t>(x)] = true;
      os << (x + 1);
      x = perm[static_cast<size_t>(x)];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "e";
}

}  // namespace

GroupPtr FiniteGroup::symmetric(unsigned n) {
  if (n == 0 || n > 4) throw PreconditionError("symmetric(n) supports 1 <= n <= 4");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const size_t m = perms.size();
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& q : perms) names.push_back(cycle_notation(q));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < m; ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      // (a*b)(x) = a(b(x)).
      std::vector<int> comp(n);
      for (unsigned x = 0; x < n; ++x) {
        comp[x] = perms[i][static_cast<size_t>(perms[j][x])];
      }
      table[i][j] = index.at(comp);
    }
  }
  return finalize(std::move(names), std::move(table));
}

GroupPtr FiniteGroup::product(const GroupPtr& a, const GroupPtr& b) {
  const size_t na = a->order(), nb = b->order();
  std::vector<std::string> names;
  names.reserve(na * nb);
  for (size_t i = 0; i < na; ++i) {
    for (size_t j = 0; j < nb; ++j) {
      names.push_back("(" + a->name(static_cast<int>(i)) + "," + b->name(static_cast<int>(j)) + ")");
    }
  }
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (size_t i = 0; i < na * nb; ++i) {
    for (size_t j = 0; j < na * nb; ++j) {
      const int ai = static_cast<int>(i / nb), bi = static_cast<int>(i % nb);
      const int aj = static_cast<int>(j / nb), bj = static_cast<int>(j % nb);
      table[i][j] = a->mul(ai, aj) * static_cast<int>(nb) + b->mul(bi, bj);
    }
  }
  return finalize(std::move(names), std::move(table));
}

GroupPtr FiniteGroup::from_table(std::vector<std::string> elements,
                                 std::vector<std::vector<int>> table) {
  return finalize(std::move(elements), std::move(table));
}

int FiniteGroup::power(int a, long e) const {
  const unsigned ord = element_orders_[static_cast<size_t>(a)];
  long k = e % static_cast<long>(ord);
  if (k < 0) k += ord;
  int acc = identity_;
  for (long i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

int FiniteGroup::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  throw PreconditionError("unknown group element \"" + name + "\"");
}

std::vector<int> FiniteGroup::subgroup_generated(const std::vector<int>& generators) const {
  std::set<int> closure{identity_};
  std::vector<int> frontier{identity_};
  for (int g : generators) {
    if (closure.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int y : closure) {
        for (int p : {mul(x, y), mul(y, x)}) {
          if (closure.insert(p).second) next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

FiniteGroup::CommutativityReport FiniteGroup::commutativity(const std::vector<int>& subset) const {
  for (size_t i = 0; i < subset.size(); ++i) {
    for (size_t j = i + 1; j < subset.size(); ++j) {
      if (mul(subset[i], subset[j]) != mul(subset[j], subset[i])) {
        return {false, subset[i], subset[j]};
      }
    }
  }
  return {};
}

FiniteGroup::Subgroup FiniteGroup::subgroup_as_group(const std::vector<int>& elements) const {
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<int, int> to_sub;
  for (size_t i = 0; i < sorted.size(); ++i) to_sub[sorted[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  names.reserve(sorted.size());
  for (int p : sorted) names.push_back(name(p));
  std::vector<std::vector<int>> table(sorted.size(), std::vector<int>(sorted.size()));
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = 0; j < sorted.size(); ++j) {
      const int p = mul(sorted[i], sorted[j]);
      auto it = to_sub.find(p);
      if (it == to_sub.end()) {
        throw PreconditionError("subset is not closed under the group product (" + name(sorted[i]) +
                                " * " + name(sorted[j]) + " = " + name(p) + " escapes)");
      }
      table[i][j] = it->second;
    }
  }
  return {from_table(std::move(names), std::move(table)), std::move(sorted)};
}

namespace {

// One invariant-factor generator layer: element of maximal order first, then
// a recursive decomposition of the quotient, lifted so orders are preserved.
struct FactorGen {
  int element;
  unsigned order;
};

std::vector<FactorGen> invariant_generators(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  // Element of maximal order, first index wins.
  int a = 0;
  for (size_t i = 1; i < g.order(); ++i) {
    if (g.element_order(static_cast<int>(i)) > g.element_order(a)) a = static_cast<int>(i);
  }
  const unsigned d1 = g.element_order(a);
  if (g.order() == d1) {
    return {{a, d1}};  // cyclic
  }
  // Quotient by <a>: coset of x represented by its minimal element index.
  std::vector<int> apow;
  {
    int x = g.identity();
    do {
      apow.push_back(x);
      x = g.mul(x, a);
    } while (x != g.identity());
  }
  const size_t n = g.order();
  std::vector<int> coset_rep(n, -1);
  for (size_t x = 0; x < n; ++x) {
    if (coset_rep[x] >= 0) continue;
    int rep = static_cast<int>(x);
    std::vector<int> members;
    for (int p : apow) {
      const int y = g.mul(static_cast<int>(x), p);
      members.push_back(y);
      rep = std::min(rep, y);
    }
    for (int y : members) coset_rep[static_cast<size_t>(y)] = rep;
  }
  std::vector<int> reps;
  for (size_t x = 0; x < n; ++x) {
    if (coset_rep[x] == static_cast<int>(x)) reps.push_back(static_cast<int>(x));
  }
  std::map<int, int> rep_index;
  for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);
  std::vector<std::string> qnames;
  qnames.reserve(reps.size());
  for (int r : reps) qnames.push_back(g.name(r));
  std::vector<std::vector<int>> qtable(reps.size(), std::vector<int>(reps.size()));
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = 0; j < reps.size(); ++j) {
      qtable[i][j] = rep_index.at(coset_rep[static_cast<size_t>(g.mul(reps[i], reps[j]))]);
    }
  }
  const GroupPtr q = FiniteGroup::from_table(std::move(qnames), std::move(qtable));
  std::vector<FactorGen> out{{a, d1}};
  for (const auto& fg : invariant_generators(*q)) {
    const int h = reps[static_cast<size_t>(fg.element)];
    const unsigned d = fg.order;
    // h^d lies in <a>, say a^t with d | t; h * a^(-t/d) has exact order d.
    int hd = g.identity();
    for (unsigned i = 0; i < d; ++i) hd = g.mul(hd, h);
    unsigned t = 0;
    {
      int x = g.identity();
      while (x != hd) {
        x = g.mul(x, a);
        ++t;
      }
    }
    if (t % d != 0) {
      throw InvariantViolation("invariant-factor lift failed: order of quotient generator does not divide");
    }
    const int lifted = g.mul(h, g.power(a, -static_cast<long>(t / d)));
    if (g.element_order(lifted) != d) {
      throw InvariantViolation("invariant-factor lift produced wrong order");
    }
    out.push_back({lifted, d});
  }
  return out;
}

}  // namespace

DualGroup DualGroup::of(const GroupPtr& g) {
  if (!g->is_abelian()) {
    throw PreconditionError("dual group defined for abelian G only");
  }
  DualGroup d;
  d.group_ = g;
  const auto gens = invariant_generators(*g);
  for (const auto& fg : gens) {
    d.group_generators_.push_back(fg.element);
    d.factors_.push_back(fg.order);
  }
  const unsigned N = g->exponent();
  const size_t n = g->order();

  // Discrete logarithm: enumerate all exponent tuples.
  const size_t k = gens.size();
  std::vector<std::vector<unsigned>> tuples;
  std::vector<unsigned> tuple(k, 0);
  std::vector<int> element_of_tuple;
  const auto advance = [&]() {
    for (size_t i = k; i-- > 0;) {
      if (++tuple[i] < gens[i].order) return true;
      tuple[i] = 0;
    }
    return false;
  };
  do {
    int x = g->identity();
    for (size_t i = 0; i < k; ++i) x = g->mul(x, g->power(gens[i].element, tuple[i]));
    element_of_tuple.push_back(x);
    tuples.push_back(tuple);
  } while (advance());
  if (element_of_tuple.size() != n) {
    throw InvariantViolation("invariant-factor decomposition does not enumerate the group");
  }
  std::vector<std::vector<unsigned>> dlog(n);
  {
    std::vector<bool> seen(n, false);
    for (size_t t = 0; t < tuples.size(); ++t) {
      const auto x = static_cast<size_t>(element_of_tuple[t]);
      if (seen[x]) throw InvariantViolation("invariant-factor decomposition is not direct");
      seen[x] = true;
      dlog[x] = tuples[t];
    }
  }
  d.tuples_ = tuples;

  // chi_c(x) = zeta_N ^ sum_i c_i * e_i * (N / d_i), x = prod g_i^{e_i}.
  for (size_t t = 0; t < tuples.size(); ++t) {
    std::vector<Cyclotomic> values;
    values.reserve(n);
    for (size_t x = 0; x < n; ++x) {
      unsigned long acc = 0;
      for (size_t i = 0; i < k; ++i) {
        acc = (acc + static_cast<unsigned long>(tuples[t][i]) * dlog[x][i] * (N / gens[i].order)) % N;
      }
      values.push_back(Cyclotomic::root_of_unity(N, static_cast<long>(acc)));
    }
    d.characters_.emplace_back(g.get(), "chi" + std::to_string(t), std::move(values));
  }
  for (size_t i = 0; i < k; ++i) {
    std::vector<unsigned> unit(k, 0);
    unit[i] = 1;
    for (size_t t = 0; t < tuples.size(); ++t) {
      if (tuples[t] == unit) {
        d.generator_indices_.push_back(t);
        break;
      }
    }
  }
  return d;
}

const Character& DualGroup::by_name(const std::string& name) const {
  for (const auto& c : characters_) {
    if (c.name() == name) return c;
  }
  throw PreconditionError("unknown character \"" + name + "\"");
}

size_t DualGroup::product(size_t a, size_t b) const {
  const auto& ta = tuples_[a];
  const auto& tb = tuples_[b];
  std::vector<unsigned> tc(ta.size());
  for (size_t i = 0; i < ta.size(); ++i) tc[i] = (ta[i] + tb[i]) % factors_[i];
  for (size_t t = 0; t < tuples_.size(); ++t) {
    if (tuples_[t] == tc) return t;
  }
  throw InvariantViolation("character product tuple not found");
}

size_t DualGroup::inverse(size_t a) const {
  const auto& ta = tuples_[a];
  std::vector<unsigned> tc(ta.size());
  for (size_t i = 0; i < ta.size(); ++i) tc[i] = (factors_[i] - ta[i]) % factors_[i];
  for (size_t t = 0; t < tuples_.size(); ++t) {
    if (tuples_[t] == tc) return t;
  }
  throw InvariantViolation("character inverse tuple not found");
}

unsigned DualGroup::character_order(size_t a) const {
  unsigned ord = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const unsigned c = tuples_[a][i];
    ord = std::lcm(ord, factors_[i] / std::gcd(factors_[i], c == 0 ? factors_[i] : c));
  }
  return ord;
}

}  // namespace grlie
