#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tcore {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. GMP's mpq_class already maintains that invariant after every
/// arithmetic operation; construction from raw parts must call canonicalize().
using Rational = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational inverse(const Rational& r)
{
    if (is_zero(r)) {
        throw std::domain_error("inverse of zero rational");
    }
    return Rational(1) / r;
}

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". Rejects anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact square root when r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

/// r^e for any integer e (r != 0 when e < 0).
Rational pow(const Rational& r, long e);

Rational factorial(unsigned n);
Rational binomial(long n, long k);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(unsigned n);

}  // namespace tcore
