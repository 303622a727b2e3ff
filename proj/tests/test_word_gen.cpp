#include <algorithm>
#include <map>
#include <set>

#include "helpers.hpp"
#include "kautz/word_gen.hpp"

using namespace kautz;
using kautz::test::all_kautz_strings;
using kautz::test::code_of;
using kautz::test::w3;

namespace {

GeneratorConfig config_for(std::size_t n, Rational alpha = 2, bool strict = false) {
  GeneratorConfig c;
  c.length = n;
  c.alpha = alpha;
  c.strict = strict;
  return c;
}

std::string relabel(const std::string& s, const std::array<char, 3>& p) {
  std::string out = s;
  for (auto& ch : out) ch = p[ch - '0'];
  return out;
}

}  // namespace

TEST_CASE("six automaton states with two successors each") {
  const auto states = automaton_states();
  std::set<std::pair<int, int>> seen;
  for (auto s : states) {
    CHECK(s.first != s.second);
    seen.insert({s.first, s.second});
    for (auto next : automaton_successors(s)) {
      CHECK(next.first == s.second);
      CHECK(next.second != s.second);
    }
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("online suffix test") {
  CHECK(suffix_power_ok(w3("010"), 2, false));
  CHECK_FALSE(suffix_power_ok(w3("0101"), 2, false));
  // 012012 is a square, but it ends one letter early; 1 is not a prefix of 012
  CHECK(suffix_power_ok(w3("0120121"), Rational(7, 4), true));
  CHECK_FALSE(suffix_power_ok(w3("012012"), Rational(7, 4), true));
  CHECK(find_power(w3("0120121"), Rational(7, 4), true, false)->total_length == 6);
  CHECK(suffix_power_ok(w3("0"), 2, false));
  // the square 0101 sits before the last letter, not as a suffix
  CHECK(suffix_power_ok(w3("01012"), 2, false));
}

TEST_CASE("suffix test agrees with checking every suffix directly") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& s : all_kautz_strings(3, n)) {
      bool square_suffix = false;
      for (std::size_t p = 1; 2 * p <= n; ++p) {
        if (s.compare(n - 2 * p, p, s, n - p, p) == 0) square_suffix = true;
      }
      CHECK(suffix_power_ok(w3(s), 2, false) == !square_suffix);
    }
  }
}

TEST_CASE("circular square-free existence by length") {
  const std::map<std::size_t, std::size_t> counts{
      {3, 6},   {4, 12},  {5, 0},   {6, 18},   {7, 0},   {8, 24},  {9, 0},   {10, 0},
      {11, 66}, {12, 72}, {13, 78}, {14, 0},   {15, 30}, {16, 48}, {17, 0},  {18, 252},
      {19, 228}, {20, 300}, {21, 42}, {22, 462}, {23, 690}};
  for (auto [n, expected] : counts) {
    CAPTURE(n);
    CHECK(generate_all(config_for(n)).size() == expected);
  }
}

TEST_CASE("7/4+ existence drops out at 16 and 22") {
  CHECK(generate_all(config_for(16, Rational(7, 4), true)).empty());
  CHECK(generate_all(config_for(22, Rational(7, 4), true)).empty());
  CHECK(generate_all(config_for(18, Rational(7, 4), true)).size() == 144);
  CHECK(generate_all(config_for(23, Rational(7, 4), true)).size() == 276);
}

TEST_CASE("the length-16 example is emitted up to rotation and relabeling") {
  const auto target = canonicalize(w3("0121020102120102"));
  bool found = false;
  for (const auto& w : generate_all(config_for(16))) found = found || canonicalize(w) == target;
  CHECK(found);
}

TEST_CASE("lexicographic stream is sorted and checker-approved") {
  for (std::size_t n = 2; n <= 30; ++n) {
    for (auto [alpha, strict] : {std::pair{Rational(2), false}, std::pair{Rational(7, 4), true}}) {
      CAPTURE(n);
      const auto words = generate_all(config_for(n, alpha, strict));
      CHECK(std::is_sorted(words.begin(), words.end()));
      CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
      for (const auto& w : words) {
        CHECK(w.size() == n);
        CHECK_FALSE(find_power(w, alpha, strict, true).has_value());
        CHECK(border_lengths(w).empty());
      }
    }
  }
}

TEST_CASE("exhaustive stream equals brute force on short lengths") {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<std::string> brute;
    for (const auto& s : all_kautz_strings(3, n)) {
      if (s.front() != s.back() && !find_power(w3(s), 2, false, true)) brute.push_back(s);
    }
    std::vector<std::string> got;
    for (const auto& w : generate_all(config_for(n))) got.push_back(w.str());
    CHECK(got == brute);
  }
}

TEST_CASE("exhaustive stream is closed under relabeling") {
  const std::array<std::array<char, 3>, 6> perms{{{'0', '1', '2'},
                                                  {'0', '2', '1'},
                                                  {'1', '0', '2'},
                                                  {'1', '2', '0'},
                                                  {'2', '0', '1'},
                                                  {'2', '1', '0'}}};
  for (std::size_t n : {11u, 16u, 20u}) {
    std::set<std::string> set;
    for (const auto& w : generate_all(config_for(n))) set.insert(w.str());
    for (const auto& s : set) {
      for (const auto& p : perms) CHECK(set.count(relabel(s, p)) == 1);
    }
  }
}

TEST_CASE("limit and early stop") {
  auto c = config_for(20);
  c.limit = 5;
  CHECK(generate_all(c).size() == 5);
  std::size_t seen = 0;
  const auto emitted = generate(config_for(20), [&](const KautzWord&) { return ++seen < 3; });
  CHECK(emitted == 3);
}

TEST_CASE("seeded order is reproducible and starts at 01") {
  auto c = config_for(24);
  c.order = BranchOrder::seeded_random;
  c.seed = 42;
  c.limit = 8;
  const auto a = generate_all(c);
  const auto b = generate_all(c);
  REQUIRE(a.size() == 8);
  CHECK(a == b);
  for (const auto& w : a) {
    CHECK(w.str().rfind("01", 0) == 0);
    CHECK(is_circular_square_free(w));
  }
  c.seed = 43;
  CHECK(generate_all(c) != a);
}

TEST_CASE("generator rejects bad configs") {
  CHECK(code_of([] { generate_all(config_for(10, 1)); }) == ErrorCode::InvalidAlpha);
  CHECK(code_of([] { generate_all(config_for(1)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("canonical form") {
  const auto c = canonicalize(w3("012102"));
  // brute force over 6 rotations and 6 relabelings
  const std::string s = "012102";
  std::string best = "3";
  const std::array<std::array<char, 3>, 6> perms{{{'0', '1', '2'},
                                                  {'0', '2', '1'},
                                                  {'1', '0', '2'},
                                                  {'1', '2', '0'},
                                                  {'2', '0', '1'},
                                                  {'2', '1', '0'}}};
  for (std::size_t r = 0; r < s.size(); ++r) {
    for (const auto& p : perms) best = std::min(best, relabel(s.substr(r) + s.substr(0, r), p));
  }
  CHECK(c.str() == best);
  CHECK(canonicalize(c) == c);
  for (std::size_t r = 1; r < s.size(); ++r) {
    CHECK(canonicalize(w3(s.substr(r) + s.substr(0, r))) == c);
  }
  CHECK(code_of([] { canonicalize(w3("0120")); }) == ErrorCode::NotCircularlyValid);
}

TEST_CASE("canonicalize is idempotent across a whole stream") {
  for (const auto& w : generate_all(config_for(18))) {
    const auto c = canonicalize(w);
    CHECK(canonicalize(c) == c);
    CHECK(c <= w);
  }
}
