#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tanvar {

// GMP canonicalizes after every arithmetic operation: lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational. Decimal notation is rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Rational factorial(unsigned n);

/// Binomial coefficient C(n, k) as a rational (zero when k > n).
Rational binomial(unsigned n, unsigned k);

} // namespace tanvar
