#include "grlie/polynomial.hpp"

#include <algorithm>
#include <set>

namespace grlie::poly {

Poly trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

bool is_zero(const Poly& p) { return trim(p).empty(); }

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (!p[i].is_zero()) return i;
  }
  return -1;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return trim(std::move(r));
}

Poly scale(const Poly& a, const Rational& c) {
  if (c.is_zero()) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return trim(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) throw PreconditionError("polynomial division by zero");
  Poly rem = trim(a);
  int dr = degree(rem);
  if (dr < db) return {{}, rem};
  Poly quot(dr - db + 1, Rational(0));
  const Rational lead_inv = b[db].inverse();
  while (dr >= db) {
    const Rational c = rem[dr] * lead_inv;
    quot[dr - db] = c;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * b[i];
    rem = trim(std::move(rem));
    dr = degree(rem);
  }
  return {trim(std::move(quot)), rem};
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    acc = acc * x + p[i];
  }
  return acc;
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  // Iterative extended Euclid keeping Bezout rows.
  Poly r0 = trim(a), r1 = trim(b);
  Poly u0{Rational(1)}, v0{}, u1{}, v1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly u2 = sub(u0, mul(q, u1));
    Poly v2 = sub(v0, mul(q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  const int d = degree(r0);
  if (d >= 0 && !r0[d].is_one()) {
    const Rational inv = r0[d].inverse();
    r0 = scale(r0, inv);
    u0 = scale(u0, inv);
    v0 = scale(v0, inv);
  }
  return {std::move(r0), std::move(u0), std::move(v0)};
}

namespace {

constexpr unsigned long kTrialDivisionBound = 1000000UL;
constexpr size_t kMaxDivisorCount = 100000;

// Positive divisors of |n| by trial division; n must factor over primes below
// the bound except for at most one larger probable-prime cofactor.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n == 0) throw PreconditionError("divisors of zero requested");
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long p = 2; p <= kTrialDivisionBound && mpz_class(p * p) <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(mpz_class(p), e);
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 25) == 0) {
      throw PreconditionError("coefficient too large to factor by trial division: " + n.get_str());
    }
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{mpz_class(1)};
  for (const auto& [p, e] : factors) {
    const size_t old_size = divs.size();
    mpz_class pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < old_size; ++i) divs.push_back(divs[i] * pk);
      if (divs.size() > kMaxDivisorCount) {
        throw PreconditionError("too many divisor candidates in rational root search");
      }
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p_in) {
  Poly p = trim(p_in);
  if (p.empty()) throw PreconditionError("rational roots of the zero polynomial requested");
  std::vector<Rational> roots;
  // Factor out x^k first.
  size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
  }
  if (degree(p) < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Clear denominators to an integer polynomial.
  mpz_class den_lcm(1);
  for (const auto& c : p) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    den_lcm = den_lcm / g * c.denominator();
  }
  std::vector<mpz_class> ip;
  ip.reserve(p.size());
  for (const auto& c : p) ip.push_back(c.numerator() * (den_lcm / c.denominator()));

  const auto ps = divisors(ip.front());
  const auto qs = divisors(ip.back());
  std::set<std::pair<mpz_class, mpz_class>> seen;
  for (const auto& num : ps) {
    for (const auto& den : qs) {
      for (int sign : {1, -1}) {
        Rational cand(sign * num, den);
        auto key = std::make_pair(cand.numerator(), cand.denominator());
        if (!seen.insert(key).second) continue;
        if (eval(p, cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace grlie::poly
