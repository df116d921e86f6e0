#ifndef GRLIE_RATIONAL_HPP
#define GRLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "grlie/errors.hpp"

namespace grlie {

/// Arbitrary-precision rational, always kept canonical:
/// gcd(|num|, den) = 1, den >= 1, zero is 0/1.  Backed by GMP.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);

  /// Accepts "p", "-p", "p/q" with optional sign on either part.
  static Rational parse(const std::string& text);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Canonical literal: "p" when integral, otherwise "p/q".
  std::string str() const { return q_.get_str(); }

  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class q_;
};

}  // namespace grlie

#endif
