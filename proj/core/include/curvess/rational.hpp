#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace curvess {

/// Exact rational number. GMP keeps every value canonical (reduced, positive
/// denominator) as long as construction goes through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading '-'; throws Error(Syntax)
/// on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Converts an integral rational that fits in int64; throws otherwise.
std::int64_t to_int64(const Rational& q);

} // namespace curvess
