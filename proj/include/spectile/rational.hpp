#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spectile {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws std::domain_error on a zero denominator.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p", "p/q" (optional leading '+' or '-'). Whitespace around the
/// token is ignored. Throws ParseError naming the offending token.
Rational parse_rational(std::string_view token);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);

/// value - floor(value), in [0, 1).
Rational frac(const Rational& value);

bool is_integer(const Rational& value);

/// Least common multiple of the denominators (1 for an empty range).
Integer common_denominator(const std::vector<Rational>& values);

/// Narrowing conversion; throws LimitExceeded if the value does not fit.
std::int64_t to_int64(const Integer& value);

std::vector<std::string_view> split(std::string_view text, char separator);
std::string_view trim(std::string_view text);

}  // namespace spectile
