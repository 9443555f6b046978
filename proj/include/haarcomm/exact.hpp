#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace haarcomm {

// Arbitrary-precision rational. gmpxx keeps results of arithmetic in lowest
// terms with a positive denominator, so equality is structural.
using ExactScalar = mpq_class;
using BigInt = mpz_class;

inline ExactScalar rational(std::int64_t num, std::int64_t den = 1) {
    ExactScalar q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

inline ExactScalar rational(const BigInt& num, const BigInt& den) {
    ExactScalar q(num, den);
    q.canonicalize();
    return q;
}

// "p/q", or "p" for integers.
std::string to_string(const ExactScalar& q);
std::string to_string(const BigInt& z);

double to_double(const ExactScalar& q);

// Decimal rendering with the given number of significant digits.
std::string to_decimal(const ExactScalar& q, int digits = 17);

ExactScalar power(const ExactScalar& base, int exponent);

// Parses "p/q" or an integer literal; throws std::invalid_argument.
ExactScalar parse_rational(const std::string& text);

}  // namespace haarcomm
