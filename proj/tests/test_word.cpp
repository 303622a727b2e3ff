#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "kautz/word_gen.hpp"

using namespace kautz;
using kautz::test::all_kautz_strings;
using kautz::test::code_of;
using kautz::test::w3;

TEST_CASE("validate accepts kautz words") {
  const auto w = w3("01202102");
  CHECK(w.size() == 8);
  CHECK(w.str() == "01202102");
  CHECK(w3("0").size() == 1);
}

TEST_CASE("validate reports the offending index") {
  try {
    w3("011");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AdjacentRepeat);
    CHECK(e.index() == 1);
  }
  try {
    KautzWord::parse("0130", 3);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SymbolOutOfRange);
    CHECK(e.index() == 2);
  }
  CHECK(code_of([] { w3(""); }) == ErrorCode::EmptyWord);
  CHECK(code_of([] { w3("0a"); }) == ErrorCode::SymbolOutOfRange);
  const std::vector<Symbol> raw{0, 1, 1};
  CHECK(code_of([&] { validate_kautz(raw, 3); }) == ErrorCode::AdjacentRepeat);
}

TEST_CASE("subword reversed embedded") {
  const auto w = w3("01202102");
  CHECK(w.reversed().str() == "20120210");
  CHECK(w.subword(1, 3).str() == "120");
  CHECK(w.embedded(5).alphabet_size() == 5);
  CHECK(w.embedded(5).str() == w.str());
  CHECK(code_of([&] { w.subword(6, 3); }) == ErrorCode::PositionOutOfRange);
}

TEST_CASE("borders") {
  CHECK(border_lengths(w3("01202102")).empty());
  CHECK(border_lengths(w3("0121020")) == std::vector<std::size_t>{1});
  CHECK(border_lengths(w3("010")) == std::vector<std::size_t>{1});
  CHECK(border_lengths(w3("0101")) == std::vector<std::size_t>{2});
  CHECK(border_lengths(w3("01010")) == std::vector<std::size_t>{1, 3});
  CHECK(code_of([] { border_lengths(w3("0")); }) == ErrorCode::WordTooShort);
}

TEST_CASE("border set matches direct comparison") {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const auto& s : all_kautz_strings(3, n)) {
      std::vector<std::size_t> expected;
      for (std::size_t l = 1; l < n; ++l) {
        if (s.compare(0, l, s, n - l, l) == 0) expected.push_back(l);
      }
      CHECK(border_lengths(w3(s)) == expected);
    }
  }
}

TEST_CASE("find_power on the length-16 word") {
  const auto w = w3("0121020102120102");
  CHECK_FALSE(find_power(w, 2, false, true).has_value());
  const auto occ = find_power(w, Rational(7, 4), true, false);
  REQUIRE(occ.has_value());
  CHECK(occ->period == 6);
  CHECK(occ->total_length == 11);
  CHECK(occ->exponent() == Rational(11, 6));
  CHECK(occ->start == 5);
  CHECK(w.subword(occ->start, occ->total_length).str() == "20102120102");
}

TEST_CASE("the 11/6 repetition 10201210201 only occurs across the seam") {
  const auto w = w3("0121020102120102");
  const std::string doubled = w.str() + w.str();
  CHECK(doubled.find("10201210201") != std::string::npos);
  CHECK(w.str().find("10201210201") == std::string::npos);
}

TEST_CASE("circular power when first equals last") {
  const auto occ = find_power(w3("0120"), 2, false, true);
  REQUIRE(occ.has_value());
  CHECK(occ->start == 3);
  CHECK(occ->period == 1);
  CHECK(occ->total_length == 2);
}

TEST_CASE("find_power rejects alpha at most one") {
  CHECK(code_of([] { find_power(w3("012"), 1, false, false); }) == ErrorCode::InvalidAlpha);
  CHECK(code_of([] { find_power(w3("012"), Rational(1, 2), true, false); }) ==
        ErrorCode::InvalidAlpha);
}

TEST_CASE("strict versus non-strict threshold") {
  // 0102010 has period 4 and length 7, exponent exactly 7/4.
  const auto w = w3("0102010");
  CHECK(find_power(w, Rational(7, 4), false, false).has_value());
  CHECK_FALSE(find_power(w, Rational(7, 4), true, false).has_value());
  CHECK(is_74_plus_free(w));
}

TEST_CASE("square detection agrees with a naive oracle") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& s : all_kautz_strings(3, n)) {
      CHECK(is_square_free(w3(s)) == !kautz::test::naive_has_square(s));
    }
  }
}

TEST_CASE("square detection agrees with the oracle up to length 20 on sampled words") {
  // Square-free words of every length plus their one-letter mutations.
  for (std::size_t n = 13; n <= 20; ++n) {
    GeneratorConfig config;
    config.length = n;
    config.limit = 40;
    for (const auto& w : generate_all(config)) {
      const auto s = w.str();
      CHECK(is_square_free(w) == !kautz::test::naive_has_square(s));
      for (std::size_t i = 0; i < n; ++i) {
        for (char c : {'0', '1', '2'}) {
          std::string m = s;
          m[i] = c;
          bool kautz = true;
          for (std::size_t j = 0; j + 1 < n; ++j) kautz = kautz && m[j] != m[j + 1];
          if (!kautz) continue;
          CHECK(is_square_free(w3(m)) == !kautz::test::naive_has_square(m));
        }
      }
    }
  }
}

TEST_CASE("circular freeness equals freeness of every rotation") {
  for (std::size_t n = 2; n <= 11; ++n) {
    for (const auto& s : all_kautz_strings(3, n)) {
      if (s.front() == s.back()) {
        CHECK_FALSE(is_circular_square_free(w3(s)));
        continue;
      }
      bool every = true;
      for (std::size_t r = 0; r < n; ++r) {
        const std::string rot = s.substr(r) + s.substr(0, r);
        // squares of length up to n inside the cyclic word
        const std::string twice = rot + rot;
        for (std::size_t i = 0; i < n && every; ++i) {
          for (std::size_t p = 1; 2 * p <= n && every; ++p) {
            if (twice.compare(i, p, twice, i + p, p) == 0) every = false;
          }
        }
      }
      CHECK(is_circular_square_free(w3(s)) == every);
    }
  }
}

TEST_CASE("circular freeness implies linear freeness and no borders") {
  for (std::size_t n = 3; n <= 13; ++n) {
    for (const auto& s : all_kautz_strings(3, n)) {
      const auto w = w3(s);
      if (!is_circular_square_free(w)) continue;
      CHECK(is_square_free(w));
      CHECK(is_unbordered(w));
    }
  }
}

TEST_CASE("admissible overlaps of the worked example") {
  const auto w = w3("01202102");
  CHECK(admissible_overlaps(w, 2).values == std::vector<std::size_t>{3});
  // suffix "2" recurs at indices 2 and 4
  CHECK(admissible_overlaps(w, 1).values == std::vector<std::size_t>{3, 5});
  CHECK(admissible_overlaps(w, 3).values.empty());
  CHECK(code_of([&] { admissible_overlaps(w, 0); }) == ErrorCode::PositionOutOfRange);
  CHECK(code_of([&] { admissible_overlaps(w, 4); }) == ErrorCode::PositionOutOfRange);
}

TEST_CASE("worked example template") {
  const auto tpl = witness_template(w3("01202102"), 2, 3);
  REQUIRE(tpl.has_value());
  CHECK(tpl->b == "02");
  CHECK(tpl->v == "1");
  CHECK(tpl->a == "012");
  CHECK(tpl->cost() == 1);
  CHECK(tpl->a + tpl->b + tpl->v + tpl->b == "01202102");
  CHECK(tpl->forced_positions == std::vector<std::size_t>{9});
  CHECK_FALSE(witness_template(w3("01202102"), 2, 4).has_value());
}

TEST_CASE("admissible overlaps agree with the factorization definition") {
  for (std::size_t n = 3; n <= 10; ++n) {
    for (const auto& s : all_kautz_strings(3, n)) {
      const auto w = w3(s);
      for (std::size_t t = 1; 2 * t <= n - 1; ++t) {
        std::vector<std::size_t> expected;
        for (std::size_t r = t + 1; r + t + 1 <= n; ++r) {
          // w = A B V B with |B| = t, |BV| = r, |A| = n - r - t >= 1
          if (s.compare(n - r - t, t, s, n - t, t) == 0) expected.push_back(r);
        }
        CHECK(admissible_overlaps(w, t).values == expected);
        for (auto r : expected) {
          const auto tpl = witness_template(w, t, r);
          REQUIRE(tpl.has_value());
          CHECK(tpl->a + tpl->b + tpl->v + tpl->b == s);
          CHECK(tpl->v.size() == r - t);
        }
      }
    }
  }
}

TEST_CASE("R_t separation on square-free words up to length 40") {
  for (std::size_t n : {12u, 20u, 28u, 34u, 40u}) {
    GeneratorConfig config;
    config.length = n;
    config.limit = 30;
    for (const auto& w : generate_all(config)) {
      for (std::size_t t = 1; 2 * t <= n - 1; ++t) {
        const auto r = admissible_overlaps(w, t).values;
        for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] - r[i - 1] >= t + 1);
      }
    }
  }
}

TEST_CASE("template cost on 7/4+-free words up to length 40") {
  for (std::size_t n : {18u, 24u, 30u, 36u, 40u}) {
    GeneratorConfig config;
    config.length = n;
    config.alpha = Rational(7, 4);
    config.strict = true;
    config.limit = 30;
    for (const auto& w : generate_all(config)) {
      REQUIRE(is_74_plus_free(w));
      for (std::size_t t = 1; 2 * t <= n - 1; ++t) {
        for (auto r : admissible_overlaps(w, t).values) CHECK(3 * (r - t) >= t);
      }
    }
  }
}

TEST_CASE("threshold helper") {
  const PowerThreshold square(2, false);
  CHECK(square.forbids(4, 2));
  CHECK_FALSE(square.forbids(3, 2));
  CHECK(square.min_forbidden_length(3) == 6);
  const PowerThreshold plus(Rational(7, 4), true);
  CHECK_FALSE(plus.forbids(7, 4));
  CHECK(plus.forbids(8, 4));
  CHECK(plus.min_forbidden_length(4) == 8);
  CHECK(code_of([] { PowerThreshold(1, true); }) == ErrorCode::InvalidAlpha);
}
