#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace kautz {

/// Exact path counts. 128 bits leaves headroom well past d=2, D=64.
using Count = unsigned __int128;

using BigInt = boost::multiprecision::cpp_int;
/// Canonical reduced fraction; small values stay inline, large ones grow.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(Count value);
Count parse_count(std::string_view text);

/// Overflow-checked arithmetic; throws Error(Overflow).
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
Count checked_pow(Count base, unsigned exponent);

BigInt to_bigint(Count value);
Rational to_rational(Count value);

/// "p/q" or "p". Throws Error(InvalidArgument) on malformed input.
Rational parse_rational(std::string_view text);
/// Always "p/q" with q >= 1 (integers print as "p/1").
std::string format_rational(const Rational& value);
/// Decimal with `places` fractional digits, rounded half away from zero.
std::string format_decimal(const Rational& value, unsigned places);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

}  // namespace kautz
