#include "grlie/scalar.hpp"

#include "grlie/errors.hpp"

namespace grlie {

unsigned Scalar::field_order() const {
  return is_rational_repr() ? 1 : cyclotomic().order();
}

Scalar Scalar::in_order(unsigned order) const {
  if (is_rational_repr()) {
    if (order == 1) return *this;
    return Scalar(Cyclotomic(rational(), order));
  }
  return Scalar(cyclotomic().embedded(order));
}

bool Scalar::is_zero() const {
  return is_rational_repr() ? rational().is_zero() : cyclotomic().is_zero();
}

bool Scalar::is_one() const {
  if (is_rational_repr()) return rational().is_one();
  return cyclotomic().is_rational() && cyclotomic().rational_value().is_one();
}

Rational Scalar::to_rational() const {
  if (is_rational_repr()) return rational();
  return cyclotomic().rational_value();
}

Scalar Scalar::inverse() const {
  if (is_rational_repr()) return Scalar(rational().inverse());
  return Scalar(cyclotomic().inverse());
}

Scalar Scalar::operator-() const {
  if (is_rational_repr()) return Scalar(-rational());
  return Scalar(-cyclotomic());
}

namespace {

unsigned promoted_order(const Scalar& a, const Scalar& b) {
  return common_cyclotomic_order(a.field_order(), b.field_order());
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_rational_repr() && b.is_rational_repr()) return Scalar(a.rational() + b.rational());
  const unsigned n = promoted_order(a, b);
  return Scalar(a.in_order(n).cyclotomic() + b.in_order(n).cyclotomic());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_rational_repr() && b.is_rational_repr()) return Scalar(a.rational() - b.rational());
  const unsigned n = promoted_order(a, b);
  return Scalar(a.in_order(n).cyclotomic() - b.in_order(n).cyclotomic());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational_repr() && b.is_rational_repr()) return Scalar(a.rational() * b.rational());
  const unsigned n = promoted_order(a, b);
  return Scalar(a.in_order(n).cyclotomic() * b.in_order(n).cyclotomic());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.is_rational_repr() && b.is_rational_repr()) return Scalar(a.rational() / b.rational());
  const unsigned n = promoted_order(a, b);
  return Scalar(a.in_order(n).cyclotomic() / b.in_order(n).cyclotomic());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational_repr() && b.is_rational_repr()) return a.rational() == b.rational();
  if (a.is_rational_repr()) return b.cyclotomic().is_rational() && b.cyclotomic().rational_value() == a.rational();
  if (b.is_rational_repr()) return a.cyclotomic().is_rational() && a.cyclotomic().rational_value() == b.rational();
  return a.cyclotomic() == b.cyclotomic();
}

std::string Scalar::str() const {
  return is_rational_repr() ? rational().str() : cyclotomic().str();
}

}  // namespace grlie
