#include "kautz/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "kautz/error.hpp"

namespace kautz {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::AdjacentRepeat: return "AdjacentRepeat";
    case ErrorCode::SymbolOutOfRange: return "SymbolOutOfRange";
    case ErrorCode::WordTooShort: return "WordTooShort";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotCircularlyValid: return "NotCircularlyValid";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WrongOutdegree: return "WrongOutdegree";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Count parse_count(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer");
  Count value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::InvalidArgument,
                  "not a non-negative integer: " + std::string(text));
    }
    value = checked_add(checked_mul(value, 10), static_cast<Count>(c - '0'));
  }
  return value;
}

Count checked_add(Count a, Count b) {
  Count sum = a + b;
  if (sum < a) throw Error(ErrorCode::Overflow, "128-bit count addition");
  return sum;
}

Count checked_mul(Count a, Count b) {
  if (a != 0 && b > std::numeric_limits<Count>::max() / a) {
    throw Error(ErrorCode::Overflow, "128-bit count multiplication");
  }
  return a * b;
}

Count checked_pow(Count base, unsigned exponent) {
  Count result = 1;
  for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

BigInt to_bigint(Count value) {
  BigInt hi = static_cast<std::uint64_t>(value >> 64);
  BigInt lo = static_cast<std::uint64_t>(value);
  return (hi << 64) | lo;
}

Rational to_rational(Count value) { return Rational(to_bigint(value)); }

namespace {

BigInt parse_bigint(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::InvalidArgument,
                "malformed rational: " + std::string(whole));
  }
  BigInt value{std::string(text)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text, text));
  BigInt num = parse_bigint(text.substr(0, slash), text);
  BigInt den = parse_bigint(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "zero denominator: " + std::string(text));
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

BigInt floor(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil(const Rational& value) { return -floor(Rational(-value)); }

std::string format_decimal(const Rational& value, unsigned places) {
  BigInt scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  Rational scaled = abs(value) * Rational(scale);
  BigInt digits = floor(scaled + Rational(1, 2));
  std::string body = digits.str();
  if (body.size() <= places) body.insert(0, places + 1 - body.size(), '0');
  if (places > 0) body.insert(body.size() - places, ".");
  if (value < 0 && digits != 0) body.insert(0, "-");
  return body;
}

}  // namespace kautz
