#include "grlie/lie_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "grlie/errors.hpp"
#include "grlie/polynomial.hpp"

namespace grlie {

namespace {

Vector zero_vector(size_t n) { return Vector(n, Scalar(0)); }

std::string vector_str(const Vector& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << "]";
  return os.str();
}

}  // namespace

AlgebraPtr LieAlgebra::create(std::vector<std::string> basis,
                              std::vector<std::vector<Vector>> constants) {
  const size_t n = basis.size();
  if (constants.size() != n) throw PreconditionError("structure constant table has wrong shape");
  unsigned order = 1;
  for (auto& row : constants) {
    if (row.size() != n) throw PreconditionError("structure constant table has wrong shape");
    for (auto& v : row) {
      if (v.size() != n) throw PreconditionError("structure constant vector has wrong length");
      for (const auto& c : v) order = common_cyclotomic_order(order, c.field_order());
    }
  }
  if (order > 1) {
    for (auto& row : constants) {
      for (auto& v : row) {
        for (auto& c : v) c = c.in_order(order);
      }
    }
  }
  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->names_ = std::move(basis);
  alg->constants_ = std::move(constants);
  alg->order_ = order;

  // Antisymmetry.
  for (size_t i = 0; i < n; ++i) {
    if (!is_zero_vector(alg->constants_[i][i])) {
      throw PreconditionError("structure constants violate [x,x]=0 at basis vector " +
                              alg->names_[i]);
    }
    for (size_t j = i + 1; j < n; ++j) {
      if (alg->constants_[i][j] != negated(alg->constants_[j][i])) {
        throw PreconditionError("structure constants violate antisymmetry at pair (" +
                                alg->names_[i] + "," + alg->names_[j] + ")");
      }
    }
  }
  // Jacobi identity on basis triples.
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      for (size_t k = j + 1; k < n; ++k) {
        Vector s = alg->bracket(alg->constants_[i][j], alg->basis_vector(k));
        s = added(s, alg->bracket(alg->constants_[j][k], alg->basis_vector(i)));
        s = added(s, alg->bracket(alg->constants_[k][i], alg->basis_vector(j)));
        if (!is_zero_vector(s)) {
          throw PreconditionError("structure constants violate the Jacobi identity on (" +
                                  alg->names_[i] + "," + alg->names_[j] + "," + alg->names_[k] +
                                  "): defect " + vector_str(s));
        }
      }
    }
  }
  return alg;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const size_t n = dim();
  if (x.size() != n || y.size() != n) {
    throw PreconditionError("bracket operand length does not match algebra dimension");
  }
  Vector out = zero_vector(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vector& c = constants_[i][j];
      const Scalar f = x[i] * y[j];
      for (size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero()) out[k] += f * c[k];
      }
    }
  }
  return out;
}

Vector LieAlgebra::left_normed(const std::vector<Vector>& xs) const {
  if (xs.empty()) throw PreconditionError("left-normed product of an empty list");
  Vector acc = xs.front();
  for (size_t i = 1; i < xs.size(); ++i) acc = bracket(acc, xs[i]);
  return acc;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const size_t n = dim();
  Matrix m(n, n);
  for (size_t j = 0; j < n; ++j) {
    Vector col = zero_vector(n);
    for (size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      const Vector& c = constants_[i][j];
      for (size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero()) col[k] += x[i] * c[k];
      }
    }
    for (size_t k = 0; k < n; ++k) m.set(k, j, col[k]);
  }
  return m;
}

Subspace LieAlgebra::product_subspace(const Subspace& v, const Subspace& w) const {
  std::vector<Vector> brackets;
  const auto vb = v.basis_vectors();
  const auto wb = w.basis_vectors();
  brackets.reserve(vb.size() * wb.size());
  for (const auto& a : vb) {
    for (const auto& b : wb) brackets.push_back(bracket(a, b));
  }
  return Subspace::span(dim(), brackets);
}

Subspace LieAlgebra::ideal_generated(const std::vector<Vector>& seeds) const {
  IncrementalSpan span(dim());
  std::vector<Vector> work;
  for (const auto& s : seeds) {
    if (span.insert(s)) work.push_back(s);
  }
  while (!work.empty()) {
    Vector v = std::move(work.back());
    work.pop_back();
    for (size_t i = 0; i < dim(); ++i) {
      Vector w = bracket(basis_vector(i), v);
      if (span.insert(w)) work.push_back(std::move(w));
    }
  }
  return Subspace::row_space(span.to_matrix());
}

Subspace LieAlgebra::centralizer(const Subspace& s) const {
  const size_t n = dim();
  if (s.dim() == 0) return Subspace::full(n);
  std::vector<Vector> rows;
  rows.reserve(s.dim() * n);
  for (const auto& gen : s.basis_vectors()) {
    const Matrix m = ad(gen);  // x -> [s, x]; kernel equals {x : [x, s] = 0}
    for (size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
  }
  return Subspace::span(n, kernel(Matrix::from_rows(n, rows)));
}

Subspace LieAlgebra::center() const { return centralizer(Subspace::full(dim())); }

std::vector<Subspace> LieAlgebra::derived_series() const {
  std::vector<Subspace> series{Subspace::full(dim())};
  for (;;) {
    const Subspace next = product_subspace(series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  const Subspace whole = Subspace::full(dim());
  std::vector<Subspace> series{whole};
  for (;;) {
    const Subspace next = product_subspace(series.back(), whole);
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

bool LieAlgebra::is_solvable() const { return derived_series().back().dim() == 0; }
bool LieAlgebra::is_nilpotent() const { return lower_central_series().back().dim() == 0; }

bool LieAlgebra::subspace_is_solvable(const Subspace& s) const {
  Subspace cur = s;
  for (;;) {
    const Subspace next = product_subspace(cur, cur);
    if (next.dim() == 0) return true;
    if (next.dim() == cur.dim()) return false;
    cur = next;
  }
}

const Matrix& LieAlgebra::killing_form() const {
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (!killing_) {
    const size_t n = dim();
    std::vector<Matrix> ads;
    ads.reserve(n);
    for (size_t i = 0; i < n; ++i) ads.push_back(ad(basis_vector(i)));
    Matrix k(n, n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i; j < n; ++j) {
        Scalar t(0);
        for (size_t a = 0; a < n; ++a) {
          for (size_t b = 0; b < n; ++b) {
            if (ads[i].at(a, b).is_zero()) continue;
            t += ads[i].at(a, b) * ads[j].at(b, a);
          }
        }
        k.set(i, j, t);
        k.set(j, i, t);
      }
    }
    killing_ = std::make_shared<const Matrix>(std::move(k));
  }
  return *killing_;
}

Subspace LieAlgebra::radical() const {
  const size_t n = dim();
  const Subspace derived = product_subspace(Subspace::full(n), Subspace::full(n));
  if (derived.dim() == 0) return Subspace::full(n);  // abelian
  const Matrix& k = killing_form();
  std::vector<Vector> rows;
  rows.reserve(derived.dim());
  for (const auto& d : derived.basis_vectors()) rows.push_back(k.apply(d));
  const Subspace rad = Subspace::span(n, kernel(Matrix::from_rows(n, rows)));
  if (!subspace_is_solvable(rad)) {
    throw InvariantViolation(
        "computed radical is not solvable; structure constants are corrupted",
        "radical basis:\n" + rad.basis().str());
  }
  return rad;
}

bool LieAlgebra::is_semisimple() const { return rank(killing_form()) == dim(); }

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  const auto basis = s.basis_vectors();
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      if (!s.contains(bracket(basis[i], basis[j]))) return false;
    }
  }
  return true;
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
  const auto basis = s.basis_vectors();
  for (size_t i = 0; i < dim(); ++i) {
    for (const auto& v : basis) {
      if (!s.contains(bracket(basis_vector(i), v))) return false;
    }
  }
  return true;
}

Vector SubalgebraRestriction::to_parent(const Vector& v_sub) const {
  const size_t n = rows.cols();
  Vector out = zero_vector(n);
  for (size_t i = 0; i < rows.rows(); ++i) {
    if (v_sub[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (!rows.at(i, j).is_zero()) out[j] += v_sub[i] * rows.at(i, j);
    }
  }
  return out;
}

Vector SubalgebraRestriction::to_sub(const Vector& v_parent) const {
  const auto sol = solve(rows.transpose(), v_parent);
  if (!sol) throw PreconditionError("vector does not lie in the subalgebra");
  return *sol;
}

Subspace SubalgebraRestriction::lift(const Subspace& s_sub) const {
  std::vector<Vector> vectors;
  vectors.reserve(s_sub.dim());
  for (const auto& v : s_sub.basis_vectors()) vectors.push_back(to_parent(v));
  return Subspace::span(rows.cols(), vectors);
}

SubalgebraRestriction restrict_to_subalgebra(const AlgebraPtr& parent, const Subspace& s) {
  const auto basis = s.basis_vectors();
  const size_t m = basis.size();
  SubalgebraRestriction r;
  r.rows = s.basis();
  const Matrix cols = r.rows.transpose();
  std::vector<std::vector<Vector>> constants(m, std::vector<Vector>(m, zero_vector(m)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      const Vector br = parent->bracket(basis[i], basis[j]);
      const auto coords = solve(cols, br);
      if (!coords) {
        throw PreconditionError("subspace is not closed under the bracket (pair " +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
      constants[i][j] = *coords;
      constants[j][i] = negated(*coords);
    }
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (size_t i = 0; i < m; ++i) names.push_back("x" + std::to_string(i));
  r.algebra = LieAlgebra::create(std::move(names), std::move(constants));
  return r;
}

Vector QuotientAlgebra::project(const Vector& v_parent) const {
  const size_t q = section_rows.rows();
  const size_t r = ideal.dim();
  const size_t n = section_rows.cols();
  Matrix cols(n, q + r);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < q; ++j) cols.set(i, j, section_rows.at(j, i));
    for (size_t j = 0; j < r; ++j) cols.set(i, q + j, ideal.basis().at(j, i));
  }
  const auto sol = solve(cols, v_parent);
  if (!sol) throw InvariantViolation("quotient projection failed: complement + ideal do not span");
  return Vector(sol->begin(), sol->begin() + static_cast<long>(q));
}

Vector QuotientAlgebra::lift(const Vector& v_quot) const {
  const size_t n = section_rows.cols();
  Vector out = zero_vector(n);
  for (size_t i = 0; i < section_rows.rows(); ++i) {
    if (v_quot[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (!section_rows.at(i, j).is_zero()) out[j] += v_quot[i] * section_rows.at(i, j);
    }
  }
  return out;
}

QuotientAlgebra quotient_by_ideal(const AlgebraPtr& parent, const Subspace& ideal) {
  if (!parent->is_ideal(ideal)) throw PreconditionError("quotient by a subspace that is not an ideal");
  QuotientAlgebra q;
  q.ideal = ideal;
  const Subspace complement = ideal.complement_within(Subspace::full(parent->dim()));
  q.section_rows = complement.basis();
  const size_t m = q.section_rows.rows();
  const auto basis = complement.basis_vectors();
  std::vector<std::vector<Vector>> constants(m, std::vector<Vector>(m, zero_vector(m)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      const Vector br = parent->bracket(basis[i], basis[j]);
      constants[i][j] = q.project(br);
      constants[j][i] = negated(constants[i][j]);
    }
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (size_t i = 0; i < m; ++i) names.push_back("q" + std::to_string(i));
  q.algebra = LieAlgebra::create(std::move(names), std::move(constants));
  return q;
}

namespace {

Vector flatten(const Matrix& m) {
  Vector out;
  out.reserve(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  }
  return out;
}

Matrix unflatten(const Vector& v, size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m.set(i, j, v[i * n + j]);
  }
  return m;
}

// Minimal polynomial of a square matrix, monic, via the first linear
// dependence among its powers.
poly::Poly min_poly_rational(const Matrix& m) {
  const size_t n = m.rows();
  std::vector<Vector> powers;
  IncrementalSpan span(n * n);
  Matrix p = Matrix::identity(n);
  for (;;) {
    Vector flat = flatten(p);
    if (!span.insert(flat)) {
      // p = m^k depends on earlier powers: solve for the combination.
      const size_t k = powers.size();
      Matrix cols(n * n, k);
      for (size_t c = 0; c < k; ++c) {
        for (size_t r = 0; r < n * n; ++r) cols.set(r, c, powers[c][r]);
      }
      const auto sol = solve(cols, flat);
      if (!sol) throw InvariantViolation("minimal polynomial solve failed");
      poly::Poly out(k + 1, Rational(0));
      bool rational = true;
      for (size_t c = 0; c < k; ++c) {
        const Scalar& s = (*sol)[c];
        if (s.is_rational_repr()) {
          out[c] = -s.rational();
        } else if (s.cyclotomic().is_rational()) {
          out[c] = -s.cyclotomic().rational_value();
        } else {
          rational = false;
          break;
        }
      }
      if (!rational) {
        throw PreconditionError("minimal polynomial has non-rational coefficients");
      }
      out[k] = Rational(1);
      return out;
    }
    powers.push_back(std::move(flat));
    p = p * m;
  }
}

Matrix eval_poly_at_matrix(const poly::Poly& p, const Matrix& m) {
  const size_t n = m.rows();
  Matrix acc(n, n);
  for (size_t d = p.size(); d-- > 0;) {
    acc = acc * m;
    if (!p[d].is_zero()) acc = acc + Matrix::identity(n) * Scalar(p[d]);
  }
  return acc;
}

std::vector<Subspace> split_semisimple(const AlgebraPtr& algebra);

// Splits along the eigenspaces of one centroid element when its minimal
// polynomial has at least one rational root and degree >= 2.
std::optional<std::vector<Subspace>> try_split_along(const AlgebraPtr& algebra, const Matrix& phi) {
  const size_t n = algebra->dim();
  poly::Poly mp;
  try {
    mp = min_poly_rational(phi);
  } catch (const PreconditionError&) {
    return std::nullopt;  // non-rational coefficients: unusable for splitting
  }
  if (poly::degree(mp) < 2) return std::nullopt;
  std::vector<Rational> roots;
  try {
    roots = poly::rational_roots(mp);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  if (roots.empty()) return std::nullopt;

  std::vector<Subspace> pieces;
  poly::Poly residual = mp;
  for (const auto& lambda : roots) {
    const Matrix shifted = phi - Matrix::identity(n) * Scalar(lambda);
    pieces.push_back(Subspace::span(n, kernel(shifted)));
    auto [q, r] = poly::divmod(residual, poly::Poly{-lambda, Rational(1)});
    if (!poly::is_zero(r)) throw InvariantViolation("root does not divide the minimal polynomial");
    residual = q;
  }
  if (poly::degree(residual) > 0) {
    pieces.push_back(Subspace::span(n, kernel(eval_poly_at_matrix(residual, phi))));
  }
  pieces.erase(std::remove_if(pieces.begin(), pieces.end(),
                              [](const Subspace& s) { return s.dim() == 0; }),
               pieces.end());
  if (pieces.size() < 2) return std::nullopt;
  size_t total = 0;
  for (const auto& p : pieces) total += p.dim();
  if (total != n) {
    throw InvariantViolation("centroid eigenspaces do not sum to the algebra",
                             "element minimal polynomial degree " + std::to_string(poly::degree(mp)));
  }
  std::vector<Subspace> result;
  for (const auto& piece : pieces) {
    const auto restriction = restrict_to_subalgebra(algebra, piece);
    for (const auto& sub : split_semisimple(restriction.algebra)) {
      result.push_back(restriction.lift(sub));
    }
  }
  return result;
}

std::vector<Subspace> split_semisimple(const AlgebraPtr& algebra) {
  const size_t n = algebra->dim();
  const auto centroid = centroid_basis(*algebra);
  if (centroid.size() <= 1) return {Subspace::full(n)};
  for (const auto& phi : centroid) {
    if (auto pieces = try_split_along(algebra, phi)) return *pieces;
  }
  // Sums of pairs occasionally split when single basis elements do not.
  for (size_t i = 0; i < centroid.size(); ++i) {
    for (size_t j = i + 1; j < centroid.size(); ++j) {
      if (auto pieces = try_split_along(algebra, centroid[i] + centroid[j])) return *pieces;
    }
  }
  throw PreconditionError(
      "simple decomposition: centroid idempotents are not defined over the current field "
      "(non-split over Q(zeta_n))");
}

}  // namespace

std::vector<Matrix> centroid_basis(const LieAlgebra& algebra) {
  const size_t n = algebra.dim();
  // Iteratively intersect commutants of the ad operators: parameters are
  // coefficients over the current basis of candidate maps.
  std::vector<Matrix> basis;
  basis.reserve(n * n);
  for (size_t i = 0; i < n * n; ++i) {
    Matrix e(n, n);
    e.set(i / n, i % n, Scalar(1));
    basis.push_back(std::move(e));
  }
  for (size_t bi = 0; bi < n; ++bi) {
    Vector x = zero_vector(n);
    x[bi] = Scalar(1);
    const Matrix a = algebra.ad(x);
    const size_t k = basis.size();
    if (k == 0) break;
    std::vector<Vector> rows(k);
    for (size_t t = 0; t < k; ++t) rows[t] = flatten(basis[t] * a - a * basis[t]);
    // Solve sum_t c_t (P_t A - A P_t) = 0: kernel of the (n^2 x k) matrix
    // whose columns are the flattened commutators.
    Matrix cols(n * n, k);
    for (size_t t = 0; t < k; ++t) {
      for (size_t r = 0; r < n * n; ++r) cols.set(r, t, rows[t][r]);
    }
    const auto ker = kernel(cols);
    std::vector<Matrix> next;
    next.reserve(ker.size());
    for (const auto& combo : ker) {
      Matrix acc(n, n);
      for (size_t t = 0; t < k; ++t) {
        if (combo[t].is_zero()) continue;
        acc = acc + basis[t] * combo[t];
      }
      next.push_back(std::move(acc));
    }
    basis = std::move(next);
  }
  return basis;
}

std::vector<Subspace> LieAlgebra::simple_decomposition() const {
  if (!is_semisimple()) {
    throw PreconditionError("simple decomposition requires a semisimple algebra");
  }
  auto self = std::shared_ptr<const LieAlgebra>(this, [](const LieAlgebra*) {});
  auto pieces = split_semisimple(self);
  std::sort(pieces.begin(), pieces.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    // Deterministic tie-break: first pivot column of the canonical basis.
    for (size_t i = 0; i < a.dim(); ++i) {
      for (size_t j = 0; j < a.ambient(); ++j) {
        const bool az = a.basis().at(i, j).is_zero();
        const bool bz = b.basis().at(i, j).is_zero();
        if (az != bz) return bz;
      }
    }
    return false;
  });
  return pieces;
}

namespace {

struct CartanSearchResult {
  bool found = false;
  Subspace cartan{0};
};

// Engel subalgebra (Fitting null component of ad x); a nilpotent Engel
// subalgebra is a Cartan subalgebra.
CartanSearchResult try_cartan(const AlgebraPtr& algebra, const Vector& x) {
  const size_t n = algebra->dim();
  const Matrix power = algebra->ad(x).pow(static_cast<unsigned long>(n));
  const Subspace engel = Subspace::span(n, kernel(power));
  if (engel.dim() == 0 || engel.dim() == n) return {};
  if (!algebra->is_subalgebra(engel)) return {};
  const auto restriction = restrict_to_subalgebra(algebra, engel);
  if (!restriction.algebra->is_nilpotent()) return {};
  return {true, engel};
}

std::vector<Vector> cartan_candidates(size_t n) {
  std::vector<Vector> out;
  for (size_t i = 0; i < n; ++i) {
    Vector v = zero_vector(n);
    v[i] = Scalar(1);
    out.push_back(std::move(v));
  }
  for (size_t k = 1; k < n; ++k) {
    Vector v = zero_vector(n);
    for (size_t i = 0; i <= k; ++i) v[i] = Scalar(1);
    out.push_back(std::move(v));
  }
  for (long t : {2L, 3L, 5L}) {
    Vector v = zero_vector(n);
    long w = 1;
    for (size_t i = 0; i < n; ++i) {
      v[i] = Scalar(Rational(w));
      w = (w * t) % 1000003L;
    }
    out.push_back(std::move(v));
  }
  return out;
}

struct RootData {
  bool ok = false;
  std::vector<Vector> roots;  // root functionals as coordinate tuples over the Cartan basis
  std::string reason;
};

// Joint eigenspace decomposition of ad(H) on the algebra; requires all
// eigenvalues in the base field (split case).
RootData compute_roots(const AlgebraPtr& algebra, const Subspace& cartan) {
  const size_t n = algebra->dim();
  const auto hbasis = cartan.basis_vectors();
  struct Piece {
    Subspace space;
    Vector weight;
  };
  std::vector<Piece> pieces{{Subspace::full(n), {}}};
  for (const auto& h : hbasis) {
    const Matrix a = algebra->ad(h);
    std::vector<Piece> next;
    for (auto& piece : pieces) {
      // Restrict ad(h) to the piece: solve on the piece's basis.
      const auto rows = piece.space.basis_vectors();
      const size_t m = rows.size();
      Matrix cols(n, m);
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) cols.set(i, j, rows[j][i]);
      }
      Matrix restricted(m, m);
      for (size_t j = 0; j < m; ++j) {
        const auto img = a.apply(rows[j]);
        const auto coords = solve(cols, img);
        if (!coords) return {false, {}, "ad(h) does not preserve a refinement piece"};
        for (size_t i = 0; i < m; ++i) restricted.set(i, j, (*coords)[i]);
      }
      poly::Poly mp;
      try {
        mp = min_poly_rational(restricted);
      } catch (const PreconditionError&) {
        return {false, {}, "ad(h) has non-rational minimal polynomial"};
      }
      std::vector<Rational> roots;
      try {
        roots = poly::rational_roots(mp);
      } catch (const PreconditionError&) {
        return {false, {}, "eigenvalue search failed"};
      }
      size_t total = 0;
      for (const auto& lambda : roots) {
        const Matrix shifted = restricted - Matrix::identity(m) * Scalar(lambda);
        const auto ker = kernel(shifted);
        if (ker.empty()) continue;
        std::vector<Vector> lifted;
        for (const auto& kv : ker) {
          Vector v = zero_vector(n);
          for (size_t j = 0; j < m; ++j) {
            if (kv[j].is_zero()) continue;
            for (size_t i = 0; i < n; ++i) v[i] += kv[j] * rows[j][i];
          }
          lifted.push_back(std::move(v));
        }
        Piece p{Subspace::span(n, lifted), piece.weight};
        p.weight.push_back(Scalar(lambda));
        total += p.space.dim();
        next.push_back(std::move(p));
      }
      if (total != m) return {false, {}, "ad(h) does not split over the base field"};
    }
    pieces = std::move(next);
  }
  RootData out;
  out.ok = true;
  for (const auto& piece : pieces) {
    bool zero = true;
    for (const auto& w : piece.weight) zero = zero && w.is_zero();
    if (zero) continue;  // the Cartan itself
    for (size_t c = 0; c < piece.space.dim(); ++c) out.roots.push_back(piece.weight);
  }
  return out;
}

}  // namespace

SplitTypeResult classify_split_type(const AlgebraPtr& algebra) {
  if (!algebra->is_semisimple()) {
    throw PreconditionError("split-type classification requires a simple algebra");
  }
  if (algebra->simple_decomposition().size() != 1) {
    throw PreconditionError("split-type classification requires a simple algebra");
  }
  const size_t d = algebra->dim();
  CartanSearchResult cartan;
  for (const auto& x : cartan_candidates(d)) {
    cartan = try_cartan(algebra, x);
    if (cartan.found) break;
  }
  if (!cartan.found) return {"unrecognized", 0, "no nilpotent Engel subalgebra found"};
  const unsigned l = static_cast<unsigned>(cartan.cartan.dim());
  const auto unique_label = [&]() -> std::string {
    if (d == static_cast<size_t>(l) * (l + 2)) return "A" + std::to_string(l);
    if (l == 2 && d == 14) return "G2";
    if (l == 4 && d == 52) return "F4";
    if (l == 7 && d == 133) return "E7";
    if (l == 8 && d == 248) return "E8";
    if (l >= 4 && d == static_cast<size_t>(l) * (2 * l - 1)) return "D" + std::to_string(l);
    return "";
  }();
  if (!unique_label.empty()) return {unique_label, l, ""};

  const bool bc_candidate = d == static_cast<size_t>(l) * (2 * l + 1);
  const bool e6_candidate = l == 6 && d == 78;  // collides with B6/C6
  if (!bc_candidate && !e6_candidate) {
    return {"unrecognized", l, "no split type of rank " + std::to_string(l) + " has dimension " +
                                   std::to_string(d)};
  }
  if (l == 2 && !e6_candidate) return {"B2", l, "B2 and C2 coincide"};

  // Disambiguate by root lengths: kappa-norm of the dual vector t_alpha.
  const auto roots = compute_roots(algebra, cartan.cartan);
  if (!roots.ok) return {"unrecognized", l, roots.reason};
  const auto hbasis = cartan.cartan.basis_vectors();
  const Matrix& kappa = algebra->killing_form();
  Matrix gram(l, l);
  for (size_t i = 0; i < l; ++i) {
    const Vector ki = kappa.apply(hbasis[i]);
    for (size_t j = 0; j < l; ++j) {
      Scalar t(0);
      for (size_t c = 0; c < ki.size(); ++c) t += ki[c] * hbasis[j][c];
      gram.set(i, j, t);
    }
  }
  std::vector<Scalar> lengths;
  for (const auto& alpha : roots.roots) {
    const auto t_alpha = solve(gram, alpha);
    if (!t_alpha) return {"unrecognized", l, "Killing form degenerate on the Cartan subalgebra"};
    Scalar len(0);
    for (size_t i = 0; i < l; ++i) len += alpha[i] * (*t_alpha)[i];
    lengths.push_back(len);
  }
  std::vector<Scalar> distinct;
  for (const auto& len : lengths) {
    bool seen = false;
    for (const auto& d2 : distinct) seen = seen || d2 == len;
    if (!seen) distinct.push_back(len);
  }
  if (distinct.size() == 1) {
    if (e6_candidate) return {"E6", l, "all roots of equal length"};
    return {"unrecognized", l, "one root length where B/C expected"};
  }
  if (distinct.size() != 2) {
    return {"unrecognized", l, "unexpected number of distinct root lengths"};
  }
  // Short roots have the smaller kappa-length; lengths are rational here.
  const Rational r0 = distinct[0].to_rational();
  const Rational r1 = distinct[1].to_rational();
  const Scalar shorter = (r0 < r1) ? distinct[0] : distinct[1];
  size_t short_count = 0;
  for (const auto& len : lengths) {
    if (len == shorter) ++short_count;
  }
  const std::string detail = std::to_string(short_count) + " short roots of " +
                             std::to_string(lengths.size());
  if (short_count == 2 * static_cast<size_t>(l)) return {"B" + std::to_string(l), l, detail};
  if (short_count == 2 * static_cast<size_t>(l) * (l - 1)) return {"C" + std::to_string(l), l, detail};
  return {"unrecognized", l, detail};
}

}  // namespace grlie
