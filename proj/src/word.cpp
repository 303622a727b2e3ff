#include "kautz/word.hpp"

#include <algorithm>
#include <limits>

#include "kautz/error.hpp"

namespace kautz {

KautzWord validate_kautz(std::span<const Symbol> letters, int alphabet_size) {
  if (alphabet_size < 2) {
    throw Error(ErrorCode::InvalidArgument, "alphabet size must be >= 2");
  }
  if (letters.empty()) throw Error(ErrorCode::EmptyWord, "word has no letters");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] >= alphabet_size) {
      throw Error(ErrorCode::SymbolOutOfRange,
                  "letter " + std::to_string(letters[i]) + " at index " +
                      std::to_string(i) + " outside alphabet of size " +
                      std::to_string(alphabet_size),
                  i);
    }
    if (i + 1 < letters.size() && letters[i] == letters[i + 1]) {
      throw Error(ErrorCode::AdjacentRepeat,
                  "equal adjacent letters at index " + std::to_string(i), i);
    }
  }
  return KautzWord({letters.begin(), letters.end()}, alphabet_size);
}

KautzWord KautzWord::parse(std::string_view digits, int alphabet_size) {
  std::vector<Symbol> letters;
  letters.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::SymbolOutOfRange,
                  "non-digit character at index " + std::to_string(i), i);
    }
    letters.push_back(static_cast<Symbol>(c - '0'));
  }
  return validate_kautz(letters, alphabet_size);
}

std::string KautzWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Symbol s : letters_) out.push_back(static_cast<char>('0' + s));
  return out;
}

KautzWord KautzWord::reversed() const {
  return KautzWord({letters_.rbegin(), letters_.rend()}, alphabet_size_);
}

KautzWord KautzWord::subword(std::size_t pos, std::size_t len) const {
  if (len == 0 || pos + len > letters_.size()) {
    throw Error(ErrorCode::PositionOutOfRange, "subword outside the word");
  }
  return KautzWord({letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)},
                   alphabet_size_);
}

KautzWord KautzWord::embedded(int alphabet_size) const {
  if (alphabet_size < alphabet_size_) {
    return validate_kautz(letters_, alphabet_size);
  }
  return KautzWord(letters_, alphabet_size);
}

PowerThreshold::PowerThreshold(const Rational& alpha, bool strict)
    : strict_(strict) {
  if (alpha <= 1) {
    throw Error(ErrorCode::InvalidAlpha,
                "alpha must exceed 1, got " + format_rational(alpha));
  }
  const BigInt& num = boost::multiprecision::numerator(alpha);
  const BigInt& den = boost::multiprecision::denominator(alpha);
  if (num > std::numeric_limits<std::uint32_t>::max() ||
      den > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::InvalidAlpha, "alpha numerator/denominator too large");
  }
  num_ = num.convert_to<std::uint64_t>();
  den_ = den.convert_to<std::uint64_t>();
}

std::size_t PowerThreshold::min_forbidden_length(
    std::size_t period) const noexcept {
  auto scaled = static_cast<unsigned __int128>(num_) * period;
  auto q = static_cast<std::size_t>(scaled / den_);
  bool exact = scaled % den_ == 0;
  if (strict_) return q + 1;
  return exact ? q : q + 1;
}

std::vector<std::size_t> border_lengths(const KautzWord& w) {
  if (w.size() < 2) {
    throw Error(ErrorCode::WordTooShort, "borders need at least two letters");
  }
  auto s = w.letters();
  std::vector<std::size_t> out;
  for (std::size_t len = 1; len < s.size(); ++len) {
    if (std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(len),
                   s.end() - static_cast<std::ptrdiff_t>(len))) {
      out.push_back(len);
    }
  }
  return out;
}

bool is_unbordered(const KautzWord& w) { return border_lengths(w).empty(); }

std::optional<PowerOccurrence> find_power(const KautzWord& w,
                                          const Rational& alpha, bool strict,
                                          bool circular) {
  PowerThreshold threshold(alpha, strict);
  const std::size_t n = w.size();
  auto s = w.letters();
  auto at = [&](std::size_t i) { return s[i < n ? i : i - n]; };

  for (std::size_t start = 0; start < n; ++start) {
    const std::size_t cap = circular ? n : n - start;
    for (std::size_t period = 1; period < cap; ++period) {
      if (!threshold.forbids(cap, period)) break;
      std::size_t len = period;
      while (len < cap && at(start + len) == at(start + len - period)) ++len;
      if (threshold.forbids(len, period)) {
        return PowerOccurrence{start, period, len};
      }
    }
  }
  return std::nullopt;
}

bool is_square_free(const KautzWord& w) {
  return !find_power(w, Rational(2), false, false);
}

bool is_circular_square_free(const KautzWord& w) {
  return !find_power(w, Rational(2), false, true);
}

bool is_74_plus_free(const KautzWord& w) {
  return !find_power(w, Rational(7, 4), true, false);
}

AdmissibleOverlapSet admissible_overlaps(const KautzWord& w, std::size_t t) {
  const std::size_t n = w.size();
  if (t < 1 || 2 * t > n - 1 || n < 3) {
    throw Error(ErrorCode::PositionOutOfRange,
                "position " + std::to_string(t) + " needs 1 <= t <= (" +
                    std::to_string(n) + "-1)/2");
  }
  auto s = w.letters();
  auto suffix = s.subspan(n - t);
  AdmissibleOverlapSet out{t, {}};
  for (std::size_t r = t + 1; r + t + 1 <= n; ++r) {
    auto occurrence = s.subspan(n - r - t, t);
    if (std::equal(occurrence.begin(), occurrence.end(), suffix.begin())) {
      out.values.push_back(r);
    }
  }
  return out;
}

std::optional<OverlapTemplate> witness_template(const KautzWord& w,
                                                std::size_t t, std::size_t r) {
  auto admissible = admissible_overlaps(w, t);
  if (!std::binary_search(admissible.values.begin(), admissible.values.end(),
                          r)) {
    return std::nullopt;
  }
  const std::size_t n = w.size();
  const std::size_t diameter = n - 1;
  std::string text = w.str();
  OverlapTemplate tmpl;
  tmpl.t = t;
  tmpl.r = r;
  tmpl.a = text.substr(0, n - r - t);
  tmpl.b = text.substr(n - t);
  tmpl.v = text.substr(n - r, r - t);
  for (std::size_t p = diameter + t; p < diameter + r; ++p) {
    tmpl.forced_positions.push_back(p);
  }
  return tmpl;
}

}  // namespace kautz
