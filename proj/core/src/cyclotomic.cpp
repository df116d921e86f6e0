#include "grlie/cyclotomic.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "grlie/errors.hpp"
#include "grlie/polynomial.hpp"

namespace grlie {

unsigned euler_phi(unsigned n) {
  if (n == 0) throw PreconditionError("euler_phi(0)");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::atomic<unsigned> g_max_order{10000};

// Integer polynomials, coefficient of x^i at index i.
using ZPoly = std::vector<mpz_class>;

ZPoly zpoly_x_pow_minus_one(unsigned n) {
  ZPoly p(n + 1, mpz_class(0));
  p[0] = -1;
  p[n] = 1;
  return p;
}

// Exact division, divisor monic.
ZPoly zpoly_div_exact(ZPoly a, const ZPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  while (da >= 0 && a[da] == 0) --da;
  ZPoly q(da - db + 1, mpz_class(0));
  for (int k = da - db; k >= 0; --k) {
    mpz_class c = a[k + db];
    q[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) a[k + i] -= c * b[i];
  }
  return q;
}

// Cyclotomic polynomial Phi_n via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
const ZPoly& cyclotomic_polynomial(unsigned n);

std::map<unsigned, ZPoly>& phi_cache() {
  static std::map<unsigned, ZPoly> cache;
  return cache;
}

ZPoly compute_cyclotomic_polynomial(unsigned n) {
  if (n == 1) return ZPoly{mpz_class(-1), mpz_class(1)};
  ZPoly p = zpoly_x_pow_minus_one(n);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = zpoly_div_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

const ZPoly& cyclotomic_polynomial(unsigned n) {
  auto& cache = phi_cache();
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic_polynomial(n)).first;
  return it->second;
}

struct OrderTables {
  unsigned phi = 0;
  // power[k] = canonical residue of x^k mod Phi_n, k < max(n, 2*phi - 1).
  std::vector<std::vector<Rational>> power;
  poly::Poly modulus;  // Phi_n over Q, for inversion
};

std::mutex g_tables_mutex;

const OrderTables& tables_for(unsigned order) {
  if (order == 0) throw PreconditionError("cyclotomic order must be positive");
  if (order > g_max_order.load()) {
    throw PreconditionError("cyclotomic order " + std::to_string(order) +
                            " exceeds configured bound " + std::to_string(g_max_order.load()));
  }
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  static std::map<unsigned, OrderTables> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  OrderTables t;
  t.phi = euler_phi(order);
  const ZPoly& zphi = cyclotomic_polynomial(order);
  t.modulus.reserve(zphi.size());
  for (const auto& c : zphi) t.modulus.emplace_back(c, mpz_class(1));

  const unsigned kmax = std::max(order, 2 * t.phi - 1);
  t.power.resize(kmax);
  for (unsigned k = 0; k < t.phi; ++k) {
    t.power[k].assign(t.phi, Rational(0));
    t.power[k][k] = Rational(1);
  }
  for (unsigned k = t.phi; k < kmax; ++k) {
    // x^k = x * x^(k-1); the overflow into x^phi folds back via
    // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}), Phi_n monic.
    const auto& prev = t.power[k - 1];
    std::vector<Rational> row(t.phi, Rational(0));
    for (unsigned i = 0; i + 1 < t.phi; ++i) row[i + 1] = prev[i];
    const Rational& top = prev[t.phi - 1];
    if (!top.is_zero()) {
      for (unsigned i = 0; i < t.phi; ++i) row[i] -= top * t.modulus[i];
    }
    t.power[k] = std::move(row);
  }
  return cache.emplace(order, std::move(t)).first->second;
}

}  // namespace

unsigned max_cyclotomic_order() { return g_max_order.load(); }
void set_max_cyclotomic_order(unsigned bound) { g_max_order.store(bound); }

unsigned common_cyclotomic_order(unsigned a, unsigned b) {
  const unsigned long long l = std::lcm<unsigned long long>(a, b);
  if (l > g_max_order.load()) {
    throw PreconditionError("cyclotomic order lcm(" + std::to_string(a) + "," + std::to_string(b) +
                            ") = " + std::to_string(l) + " exceeds configured bound " +
                            std::to_string(g_max_order.load()));
  }
  return static_cast<unsigned>(l);
}

Cyclotomic::Cyclotomic(Rational value, unsigned order) : order_(order) {
  const auto& t = tables_for(order);
  coeffs_.assign(t.phi, Rational(0));
  coeffs_[0] = std::move(value);
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  const auto& t = tables_for(order);
  if (coeffs_.size() != t.phi) {
    throw PreconditionError("cyclotomic of order " + std::to_string(order) + " needs " +
                            std::to_string(t.phi) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
  }
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long power) {
  const auto& t = tables_for(order);
  long k = power % static_cast<long>(order);
  if (k < 0) k += order;
  return Cyclotomic(order, t.power[static_cast<unsigned>(k)]);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) {
    throw PreconditionError("cyclotomic value is not rational: " + str());
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embedded(unsigned new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) {
    throw PreconditionError("no embedding of Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                            std::to_string(new_order) + ")");
  }
  const auto& t = tables_for(new_order);
  const unsigned step = new_order / order_;
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& row = t.power[(k * step) % new_order];
    for (unsigned i = 0; i < t.phi; ++i) out[i] += coeffs_[k] * row[i];
  }
  return Cyclotomic(new_order, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  const auto& t = tables_for(order_);
  poly::Poly a(coeffs_.begin(), coeffs_.end());
  auto bez = poly::ext_gcd(a, t.modulus);
  // Phi_n is irreducible over Q, so the gcd of a nonzero residue with it is 1.
  if (poly::degree(bez.g) != 0) {
    throw InvariantViolation("cyclotomic inversion found nontrivial gcd with Phi_n");
  }
  poly::Poly inv = poly::scale(bez.u, bez.g[0].inverse());
  auto [q, r] = poly::divmod(inv, t.modulus);
  (void)q;
  r.resize(t.phi, Rational(0));
  return Cyclotomic(order_, std::move(r));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned n = common_cyclotomic_order(a.order_, b.order_);
  Cyclotomic x = a.embedded(n), y = b.embedded(n);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned n = common_cyclotomic_order(a.order_, b.order_);
  Cyclotomic x = a.embedded(n), y = b.embedded(n);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
  return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned n = common_cyclotomic_order(a.order_, b.order_);
  Cyclotomic x = a.embedded(n), y = b.embedded(n);
  const auto& t = tables_for(n);
  const unsigned phi = t.phi;
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (unsigned i = 0; i < phi; ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (y.coeffs_[j].is_zero()) continue;
      conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  std::vector<Rational> out(phi, Rational(0));
  for (unsigned k = 0; k < conv.size(); ++k) {
    if (conv[k].is_zero()) continue;
    const auto& row = t.power[k];
    for (unsigned i = 0; i < phi; ++i) out[i] += conv[k] * row[i];
  }
  return Cyclotomic(n, std::move(out));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const unsigned n = common_cyclotomic_order(a.order_, b.order_);
  return a.embedded(n).coeffs_ == b.embedded(n).coeffs_;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[k].str();
    if (k >= 1) os << "*z^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " (order " << order_ << ")";
  return os.str();
}

}  // namespace grlie
