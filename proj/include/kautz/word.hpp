#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kautz/numeric.hpp"

namespace kautz {

using Symbol = std::uint8_t;

/// A word over {0, ..., alphabet_size-1} whose adjacent letters differ.
/// The same type holds vertices (length D), edge-words (length D+1) and
/// walk-words (length D+k).
class KautzWord {
 public:
  /// Parses an ASCII digit string. Throws Error on any violated invariant.
  static KautzWord parse(std::string_view digits, int alphabet_size);

  std::size_t size() const noexcept { return letters_.size(); }
  Symbol operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<const Symbol> letters() const noexcept { return letters_; }
  int alphabet_size() const noexcept { return alphabet_size_; }

  std::string str() const;
  KautzWord reversed() const;
  KautzWord subword(std::size_t pos, std::size_t len) const;
  /// Same letters viewed over a larger alphabet.
  KautzWord embedded(int alphabet_size) const;

  friend bool operator==(const KautzWord&, const KautzWord&) = default;
  friend std::strong_ordering operator<=>(const KautzWord& a,
                                          const KautzWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  friend KautzWord validate_kautz(std::span<const Symbol>, int);
  KautzWord(std::vector<Symbol> letters, int alphabet_size)
      : letters_(std::move(letters)), alphabet_size_(alphabet_size) {}

  std::vector<Symbol> letters_;
  int alphabet_size_ = 0;
};

KautzWord validate_kautz(std::span<const Symbol> letters, int alphabet_size);

/// A repetition x^k y located in a word: `total_length` letters starting at
/// `start` have period `period`. In circular mode the occurrence is read in
/// the doubled word and never spans more than one full turn.
struct PowerOccurrence {
  std::size_t start = 0;
  std::size_t period = 0;
  std::size_t total_length = 0;

  Rational exponent() const {
    return Rational(static_cast<long long>(total_length),
                    static_cast<long long>(period));
  }
  friend bool operator==(const PowerOccurrence&,
                         const PowerOccurrence&) = default;
};

/// Exact exponent threshold: a repetition of length `len` and period `p`
/// is forbidden when len/p >= alpha (or > alpha when strict).
class PowerThreshold {
 public:
  PowerThreshold(const Rational& alpha, bool strict);

  bool forbids(std::size_t length, std::size_t period) const noexcept {
    // length/period vs num/den, cross-multiplied in 128 bits.
    auto lhs = static_cast<unsigned __int128>(length) * den_;
    auto rhs = static_cast<unsigned __int128>(num_) * period;
    return strict_ ? lhs > rhs : lhs >= rhs;
  }
  /// Smallest repetition length with period `period` that is forbidden.
  std::size_t min_forbidden_length(std::size_t period) const noexcept;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
  bool strict_;
};

std::vector<std::size_t> border_lengths(const KautzWord& w);
bool is_unbordered(const KautzWord& w);

std::optional<PowerOccurrence> find_power(const KautzWord& w,
                                          const Rational& alpha, bool strict,
                                          bool circular);

bool is_square_free(const KautzWord& w);
bool is_circular_square_free(const KautzWord& w);
/// 7/4+-free: no repetition with exponent strictly above 7/4.
bool is_74_plus_free(const KautzWord& w);

struct AdmissibleOverlapSet {
  std::size_t t = 0;
  std::vector<std::size_t> values;  // ascending

  friend bool operator==(const AdmissibleOverlapSet&,
                         const AdmissibleOverlapSet&) = default;
};

/// The overlap lengths r in [t+1, n-t-1] for which w = A B V B with |B| = t,
/// |BV| = r and V non-empty.
AdmissibleOverlapSet admissible_overlaps(const KautzWord& w, std::size_t t);

/// The factorization w = A (B V) B behind one admissible (t, r), plus the
/// walk-word positions D+t .. D+r-1 whose letters it forces in the right
/// flank of a length-D walk (D = |w| - 1).
struct OverlapTemplate {
  std::size_t t = 0;
  std::size_t r = 0;
  std::string a;
  std::string b;
  std::string v;
  std::vector<std::size_t> forced_positions;

  std::size_t cost() const noexcept { return r - t; }
};

std::optional<OverlapTemplate> witness_template(const KautzWord& w,
                                                std::size_t t, std::size_t r);

}  // namespace kautz
