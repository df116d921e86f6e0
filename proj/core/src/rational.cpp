#include "grlie/rational.hpp"

#include <ostream>

namespace grlie {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) {
    throw PreconditionError("rational with zero denominator");
  }
  q_ = mpq_class(std::move(num), std::move(den));
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(text), mpz_class(1));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (sgn(den) == 0) {
      throw ParseError("rational literal with zero denominator: \"" + text + "\"");
    }
    return Rational(std::move(num), std::move(den));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: \"" + text + "\"");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw PreconditionError("division by zero");
  }
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw PreconditionError("division by zero");
  }
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace grlie
