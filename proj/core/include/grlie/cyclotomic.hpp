#ifndef GRLIE_CYCLOTOMIC_HPP
#define GRLIE_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "grlie/rational.hpp"

namespace grlie {

unsigned euler_phi(unsigned n);

/// Largest cyclotomic order the library will embed into (spec default 10^4).
unsigned max_cyclotomic_order();
void set_max_cyclotomic_order(unsigned bound);

/// lcm of two orders, checked against max_cyclotomic_order().
unsigned common_cyclotomic_order(unsigned a, unsigned b);

/// Element of the cyclotomic field Q(zeta_n), stored as the canonical residue
/// modulo the n-th cyclotomic polynomial: coefficients of 1, x, ..., x^(phi(n)-1).
/// Arithmetic between different orders first embeds both operands into the
/// lcm order; no operation ever lowers the ambient order.
class Cyclotomic {
public:
  Cyclotomic() : order_(1), coeffs_{Rational(0)} {}
  explicit Cyclotomic(Rational value, unsigned order = 1);
  Cyclotomic(unsigned order, std::vector<Rational> coeffs);

  static Cyclotomic zeta(unsigned order) { return root_of_unity(order, 1); }
  static Cyclotomic root_of_unity(unsigned order, long power);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational; precondition: is_rational().
  Rational rational_value() const;

  /// Image under Q(zeta_n) -> Q(zeta_m), n | m.
  Cyclotomic embedded(unsigned new_order) const;

  Cyclotomic inverse() const;
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);

  /// Value equality (representations of different orders are embedded first).
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Human-readable form like "1/2 + 3*z^2 (order 8)"; diagnostics only.
  std::string str() const;

private:
  unsigned order_;
  std::vector<Rational> coeffs_;
};

}  // namespace grlie

#endif
