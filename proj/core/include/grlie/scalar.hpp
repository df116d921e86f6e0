#ifndef GRLIE_SCALAR_HPP
#define GRLIE_SCALAR_HPP

#include <string>
#include <variant>

#include "grlie/cyclotomic.hpp"
#include "grlie/rational.hpp"

namespace grlie {

/// Exact field element: a rational or a cyclotomic number.  Mixed-order
/// arithmetic embeds into Q(zeta_lcm); equality compares values, not
/// representations.  Serialization preserves the representation as built.
class Scalar {
public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}  // NOLINT: implicit by design
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(Cyclotomic c) : v_(std::move(c)) {}

  bool is_rational_repr() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const Cyclotomic& cyclotomic() const { return std::get<Cyclotomic>(v_); }

  /// 1 for a plain rational, the ambient order for a cyclotomic.
  unsigned field_order() const;

  /// Representation promoted into Q(zeta_order); order must be a multiple of
  /// field_order().  A rational asked for order 1 is returned unchanged.
  Scalar in_order(unsigned order) const;

  bool is_zero() const;
  bool is_one() const;

  /// Value as a rational if the value lies in Q, otherwise a precondition error.
  Rational to_rational() const;

  Scalar inverse() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

private:
  std::variant<Rational, Cyclotomic> v_;
};

}  // namespace grlie

#endif
