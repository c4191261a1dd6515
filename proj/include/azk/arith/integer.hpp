#pragma once

// Big integers and rationals (GMP-backed) plus the small amount of
// elementary number theory the rest of the library leans on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace azk {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational inverse(const Rational& x)
{
    if (sgn(x) == 0)
        throw std::domain_error("inverse of zero rational");
    Rational r = 1 / x;
    return r;
}

inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline Integer zero_like(const Integer&) { return Integer(0); }

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

bool is_prime(const Integer& n);
bool is_prime(long n);
std::vector<long> primes_up_to(long limit);
long next_prime(long n);

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs in
/// increasing prime order. Trial division followed by Brent's variant of
/// Pollard rho.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);
std::vector<Integer> prime_divisors(const Integer& n);

/// p-adic valuation; throws on zero input.
int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& x, const Integer& p);

/// Legendre symbol (a|p) for odd prime p; 0 when p divides a.
int legendre(const Integer& a, const Integer& p);

/// Exact square root of a nonnegative rational, if it has one.
std::optional<Rational> rational_sqrt(const Rational& x);
bool is_rational_square(const Rational& x);

/// Integer square root floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

Integer binomial(unsigned long n, unsigned long k);

} // namespace azk
