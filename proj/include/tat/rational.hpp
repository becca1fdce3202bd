#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tat {

using Rational = mpq_class;

// Parses "a", "a/b" or "-a/b"; the result is canonicalized.
Rational parse_rational(const std::string& s);

// Lowest-terms text, "a" when the denominator is 1.
std::string to_string(const Rational& q);

Rational floor_of(const Rational& q);

// Representative of q modulo 1 in [0, 1).
Rational frac(const Rational& q);

// Representative of q modulo 1 in (-1/2, 1/2].
Rational signed_frac(const Rational& q);

std::int64_t to_int64(const mpz_class& z);

std::int64_t mod(std::int64_t a, std::int64_t m);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Inverse of a modulo m; requires gcd(a, m) = 1 and m >= 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace tat
