#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace recurseq {

using Integer = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Signed index into a sequence. Indices are bounded by an explicit cap
/// long before they could overflow 64 bits.
using Index = std::int64_t;

inline constexpr Index kDefaultMaxIndex = 10'000'000;

/// num/den in lowest terms. Throws InvalidArgument when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses a base-10 integer with optional sign. Throws InvalidArgument.
Integer parse_integer(std::string_view text);

/// Parses "n" or "n/d" (optional sign, surrounding blanks ignored).
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Decimal expansion with exactly `digits` places after the point, rounded
/// half-to-even from the exact value. digits == 0 yields an integer string.
std::string to_decimal(const Rational& value, unsigned digits);

/// base^exp for an integer base and a possibly negative exponent. A zero base
/// with negative exponent throws InverseUnavailable.
Rational rational_pow(const Integer& base, Index exp);

Integer int_pow(const Integer& base, unsigned long exp);

/// Throws ResourceLimit when |index| exceeds max_index.
void check_index_cap(const Integer& index, Index max_index);
void check_index_cap(Index index, Index max_index);

/// Converts an index that already passed check_index_cap.
Index to_index(const Integer& index);

}  // namespace recurseq
