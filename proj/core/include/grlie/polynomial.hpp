#ifndef GRLIE_POLYNOMIAL_HPP
#define GRLIE_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "grlie/rational.hpp"

namespace grlie::poly {

/// Dense univariate polynomials over the rationals, coefficient of x^i at
/// index i.  The zero polynomial is the empty vector; all results are trimmed.
using Poly = std::vector<Rational>;

Poly trim(Poly p);
bool is_zero(const Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

Rational eval(const Poly& p, const Rational& x);

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
struct ExtGcd {
  Poly g, u, v;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// All rational roots of p (each listed once), found via the rational-root
/// theorem on the denominator-cleared form.  Throws PreconditionError when a
/// leading/trailing coefficient is too large to factor by trial division.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace grlie::poly

#endif
