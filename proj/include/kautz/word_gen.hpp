#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kautz/numeric.hpp"
#include "kautz/word.hpp"

namespace kautz {

enum class BranchOrder { lexicographic, seeded_random };

struct GeneratorConfig {
  std::size_t length = 0;  // D + 1
  Rational alpha = 2;
  bool strict = false;
  BranchOrder order = BranchOrder::lexicographic;
  std::uint64_t seed = 0;  // only read for seeded_random
  std::optional<std::size_t> limit;
};

/// Last two letters of a ternary Kautz prefix; one of 01,02,10,12,20,21.
struct AutomatonState {
  Symbol first;
  Symbol second;

  friend bool operator==(const AutomatonState&, const AutomatonState&) = default;
};

std::array<AutomatonState, 6> automaton_states();
/// ab -> bc for each c != b.
std::array<AutomatonState, 2> automaton_successors(AutomatonState s);

/// True iff no repetition ending at the last letter reaches the threshold.
bool suffix_power_ok(const KautzWord& prefix, const Rational& alpha,
                     bool strict);

/// Called once per emitted word; return false to stop the stream.
using WordSink = std::function<bool(const KautzWord&)>;

/// Backtracking over the 6-state automaton. Lexicographic order walks all six
/// start states and yields the sorted set of circularly alpha-free ternary
/// words of the configured length. Seeded order starts from "01" and shuffles
/// the two successors at every step with std::mt19937_64 seeded by `seed`.
/// Returns the number of words emitted.
std::size_t generate(const GeneratorConfig& config, const WordSink& sink);
std::vector<KautzWord> generate_all(const GeneratorConfig& config);

/// Lexicographically least image of w under rotation and relabeling of
/// {0,1,2}. Throws NotCircularlyValid when a rotation breaks adjacency.
KautzWord canonicalize(const KautzWord& w);

}  // namespace kautz
