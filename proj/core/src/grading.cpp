#include "grlie/grading.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "grlie/errors.hpp"
#include "grlie/structure.hpp"

namespace grlie {

GradingPtr Grading::validate(AlgebraPtr algebra, GroupPtr group, std::vector<int> degrees) {
  const size_t n = algebra->dim();
  if (degrees.size() != n) {
    throw PreconditionError("grading must assign a degree to every basis vector");
  }
  for (int d : degrees) {
    if (d < 0 || static_cast<size_t>(d) >= group->order()) {
      throw PreconditionError("grading degree index out of range");
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const Vector& c = algebra->basis_bracket(i, j);
      const int target = group->mul(degrees[i], degrees[j]);
      for (size_t k = 0; k < n; ++k) {
        if (c[k].is_zero()) continue;
        if (degrees[k] != target) {
          std::ostringstream os;
          os << "grading containment fails: [" << algebra->basis_names()[i] << ", "
             << algebra->basis_names()[j] << "] has a component at " << algebra->basis_names()[k]
             << " of degree " << group->name(degrees[k]) << ", expected degree "
             << group->name(target);
          throw PreconditionError(os.str());
        }
      }
    }
  }
  auto gr = std::shared_ptr<Grading>(new Grading());
  gr->algebra_ = std::move(algebra);
  gr->group_ = std::move(group);
  gr->degrees_ = std::move(degrees);
  return gr;
}

GradingPtr Grading::trivial(AlgebraPtr algebra, GroupPtr group) {
  std::vector<int> degrees(algebra->dim(), group->identity());
  return validate(std::move(algebra), std::move(group), std::move(degrees));
}

std::vector<size_t> Grading::fiber_coordinates(int g) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] == g) out.push_back(i);
  }
  return out;
}

Subspace Grading::fiber(int g) const {
  const size_t n = algebra_->dim();
  std::vector<Vector> rows;
  for (size_t i : fiber_coordinates(g)) rows.push_back(algebra_->basis_vector(i));
  return Subspace::span(n, rows);
}

std::vector<int> Grading::support() const {
  std::set<int> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

std::optional<int> Grading::degree_of(const Vector& v) const {
  std::optional<int> deg;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (deg && *deg != degrees_[i]) return std::nullopt;
    deg = degrees_[i];
  }
  return deg;
}

GradedSubspace::GradedSubspace(GradingPtr grading, std::map<int, Subspace> components)
    : grading_(std::move(grading)),
      components_(std::move(components)),
      total_(grading_->algebra()->dim()) {
  for (auto it = components_.begin(); it != components_.end();) {
    if (it->second.dim() == 0) {
      it = components_.erase(it);
    } else {
      total_ = total_.sum(it->second);
      ++it;
    }
  }
}

const Subspace& GradedSubspace::component(int g) const {
  static const Subspace empty0{0};
  auto it = components_.find(g);
  if (it != components_.end()) return it->second;
  // Zero component with the right ambient dimension.
  static thread_local std::map<size_t, Subspace> zeros;
  const size_t n = grading_->algebra()->dim();
  autoز = zeros.find(n);
  if (ز == zeros.end()) ز = zeros.emplace(n, Subspace(n)).first;
  return ز->second;
}

std::vector<int> GradedSubspace::support() const {
  std::vector<int> out;
  for (const auto& [g, s] : components_) out.push_back(g);
  return out;
}

GradedSubspace::HomogeneousBasis GradedSubspace::homogeneous_basis() const {
  std::vector<Vector> rows;
  std::vector<int> degrees;
  for (const auto& [g, s] : components_) {
    for (const auto& v : s.basis_vectors()) {
      rows.push_back(v);
      degrees.push_back(g);
    }
  }
  return {Matrix::from_rows(grading_->algebra()->dim(), rows), std::move(degrees)};
}

namespace {

Vector project_to_fiber(const Vector& v, const std::vector<size_t>& coords, size_t n) {
  Vector out(n, Scalar(0));
  for (size_t i : coords) out[i] = v[i];
  return out;
}

}  // namespace

GradedSubspaceCheck is_graded_subspace(const Subspace& v, const GradingPtr& gr) {
  const size_t n = gr->algebra()->dim();
  if (v.ambient() != n) throw PreconditionError("subspace ambient dimension mismatch");
  std::map<int, std::vector<Vector>> projected;
  for (int g : gr->support()) {
    const auto coords = gr->fiber_coordinates(g);
    for (const auto& b : v.basis_vectors()) {
      Vector p = project_to_fiber(b, coords, n);
      if (!is_zero_vector(p)) projected[g].push_back(std::move(p));
    }
  }
  std::map<int, Subspace> components;
  size_t total = 0;
  for (auto& [g, vectors] : projected) {
    Subspace s = Subspace::span(n, vectors);
    total += s.dim();
    components.emplace(g, std::move(s));
  }
  if (total != v.dim()) return {false, std::nullopt};
  return {true, GradedSubspace(gr, std::move(components))};
}

Subspace graded_closure(const Subspace& v, const GradingPtr& gr) {
  const size_t n = gr->algebra()->dim();
  std::vector<Vector> rows;
  for (int g : gr->support()) {
    const auto coords = gr->fiber_coordinates(g);
    for (const auto& b : v.basis_vectors()) {
      Vector p = project_to_fiber(b, coords, n);
      if (!is_zero_vector(p)) rows.push_back(std::move(p));
    }
  }
  return Subspace::span(n, rows);
}

Subspace chain_product(const GradingPtr& gr, const std::vector<int>& degrees) {
  if (degrees.empty()) throw PreconditionError("chain product of an empty degree list");
  Subspace acc = gr->fiber(degrees[0]);
  for (size_t i = 1; i < degrees.size(); ++i) {
    acc = gr->algebra()->product_subspace(acc, gr->fiber(degrees[i]));
  }
  return acc;
}

namespace {

void lemma1_dfs(const GradingPtr& gr, const std::vector<int>& support, unsigned m_max,
                std::vector<int>& tuple, const Subspace& current, Lemma1Result& result) {
  if (!result.passed || tuple.size() >= m_max) return;
  const auto& group = *gr->group();
  for (int g : support) {
    const Subspace next = gr->algebra()->product_subspace(current, gr->fiber(g));
    if (next.dim() == 0) continue;
    tuple.push_back(g);
    ++result.nonzero_chains;
    result.max_length = std::max<unsigned>(result.max_length, tuple.size());
    // The prefix is already checked; only the new degree needs testing.
    for (size_t i = 0; i + 1 < tuple.size(); ++i) {
      if (group.mul(tuple[i], g) != group.mul(g, tuple[i])) {
        result.passed = false;
        result.counterexample = tuple;
        result.witness = {tuple[i], g};
        tuple.pop_back();
        return;
      }
    }
    lemma1_dfs(gr, support, m_max, tuple, next, result);
    tuple.pop_back();
    if (!result.passed) return;
  }
}

}  // namespace

Lemma1Result check_lemma1(const GradingPtr& gr, unsigned m_max) {
  if (m_max < 2) throw PreconditionError("check_lemma1 needs m_max >= 2");
  Lemma1Result result;
  const auto support = gr->support();
  for (int g : support) {
    std::vector<int> tuple{g};
    lemma1_dfs(gr, support, m_max, tuple, gr->fiber(g), result);
    if (!result.passed) break;
  }
  return result;
}

Lemma2Result check_lemma2(const GradingPtr& gr, int g, int h) {
  const auto support = gr->support();
  const auto in_support = [&](int x) {
    return std::find(support.begin(), support.end(), x) != support.end();
  };
  if (!in_support(g) || !in_support(h)) {
    throw PreconditionError("check_lemma2: both degrees must lie in the support");
  }
  const auto& group = *gr->group();
  if (group.mul(g, h) == group.mul(h, g)) {
    throw PreconditionError("check_lemma2 requires a noncommuting pair (" + group.name(g) + ", " +
                            group.name(h) + " commute)");
  }
  Lemma2Result r;
  r.ideal_g = gr->algebra()->ideal_generated(gr->fiber(g).basis_vectors());
  r.ideal_h = gr->algebra()->ideal_generated(gr->fiber(h).basis_vectors());
  r.product = gr->algebra()->product_subspace(r.ideal_g, r.ideal_h);
  r.holds = r.product.dim() == 0;
  return r;
}

GradedSubspace graded_ideal_generated(const GradingPtr& gr, const std::vector<Vector>& seeds) {
  for (const auto& s : seeds) {
    if (is_zero_vector(s)) continue;
    if (!gr->degree_of(s)) {
      throw PreconditionError("graded_ideal_generated requires homogeneous seed vectors");
    }
  }
  const Subspace ideal = gr->algebra()->ideal_generated(seeds);
  auto check = is_graded_subspace(ideal, gr);
  if (!check.graded) {
    throw InvariantViolation("ideal generated by homogeneous seeds is not graded",
                             ideal.basis().str());
  }
  return std::move(*check.decomposition);
}

GradedSimpleResult is_graded_simple(const GradingPtr& gr) {
  const auto& algebra = *gr->algebra();
  const Subspace whole = Subspace::full(algebra.dim());
  if (algebra.product_subspace(whole, whole).dim() == 0) {
    return {false, "[L,L] = 0", 0};
  }
  if (algebra.radical().dim() != 0) {
    return {false, "radical is nonzero (graded simple implies semisimple)", 0};
  }
  const auto commut = gr->group()->commutativity(gr->support());
  if (!commut.commutative) {
    return {false,
            "support is not commutative (" + gr->group()->name(commut.witness_a) + ", " +
                gr->group()->name(commut.witness_b) + ")",
            0};
  }
  const auto blocks = graded_simple_decomposition(gr);
  if (blocks.size() == 1) {
    return {true, "semisimple with a single graded block", 1};
  }
  return {false, "decomposes into " + std::to_string(blocks.size()) + " graded blocks",
          blocks.size()};
}

}  // namespace grlie
