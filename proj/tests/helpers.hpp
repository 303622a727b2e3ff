#pragma once

#include <functional>
#include <string>
#include <vector>

#include <doctest.h>

#include "kautz/error.hpp"
#include "kautz/numeric.hpp"
#include "kautz/word.hpp"

namespace kautz::test {

inline KautzWord w3(std::string_view s) { return KautzWord::parse(s, 3); }

inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected kautz::Error");
  return ErrorCode::InvariantViolation;
}

/// Every Kautz word of `length` over `alphabet` letters, lexicographic.
inline std::vector<std::string> all_kautz_strings(int alphabet, std::size_t length) {
  std::vector<std::string> out;
  std::string cur;
  std::function<void()> rec = [&] {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c < alphabet; ++c) {
      char ch = static_cast<char>('0' + c);
      if (!cur.empty() && cur.back() == ch) continue;
      cur.push_back(ch);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

/// Textbook square test: some factor XX.
inline bool naive_has_square(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t p = 1; i + 2 * p <= s.size(); ++p) {
      if (s.compare(i, p, s, i + p, p) == 0) return true;
    }
  }
  return false;
}

inline std::string str(Count c) { return to_string(c); }

}  // namespace kautz::test
