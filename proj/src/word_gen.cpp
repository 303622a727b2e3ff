#include "kautz/word_gen.hpp"

#include <algorithm>
#include <random>

#include "kautz/error.hpp"

namespace kautz {

namespace {

// Longest suffix of `s` with period `period`, capped at s.size().
std::size_t periodic_suffix_length(std::span<const Symbol> s,
                                   std::size_t period) {
  const std::size_t n = s.size();
  std::size_t len = period;
  while (len < n && s[n - 1 - (len - period)] == s[n - 1 - len]) ++len;
  return len;
}

bool suffix_ok(std::span<const Symbol> s, const PowerThreshold& threshold) {
  const std::size_t n = s.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (!threshold.forbids(n, period)) break;
    // The last `len` letters read x^m y with |x| = period, m = len / period,
    // |y| = len % period.
    if (threshold.forbids(periodic_suffix_length(s, period), period)) {
      return false;
    }
  }
  return true;
}

bool circular_ok(std::span<const Symbol> s, const PowerThreshold& threshold) {
  const std::size_t n = s.size();
  // Every rotation must stay a Kautz word.
  if (s.front() == s.back()) return false;
  auto at = [&](std::size_t i) { return s[i < n ? i : i - n]; };
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t period = 1; period < n; ++period) {
      if (!threshold.forbids(n, period)) break;
      std::size_t len = period;
      while (len < n && at(start + len) == at(start + len - period)) ++len;
      if (threshold.forbids(len, period)) return false;
    }
  }
  return true;
}

class Backtracker {
 public:
  Backtracker(const GeneratorConfig& config, const WordSink& sink)
      : config_(config),
        sink_(sink),
        threshold_(config.alpha, config.strict),
        rng_(config.seed) {
    word_.reserve(config.length);
  }

  std::size_t run() {
    if (config_.order == BranchOrder::lexicographic) {
      for (AutomatonState start : automaton_states()) {
        if (!extend_from(start)) break;
      }
    } else {
      extend_from(AutomatonState{0, 1});
    }
    return emitted_;
  }

 private:
  bool extend_from(AutomatonState start) {
    word_.assign({start.first, start.second});
    if (config_.length == 2) return finish();
    if (!suffix_ok(word_, threshold_)) return true;
    return grow();
  }

  // Returns false once the stream should stop.
  bool grow() {
    if (word_.size() == config_.length) return finish();
    auto next = automaton_successors({word_[word_.size() - 2], word_.back()});
    if (config_.order == BranchOrder::seeded_random && (rng_() & 1U)) {
      std::swap(next[0], next[1]);
    }
    for (AutomatonState state : next) {
      word_.push_back(state.second);
      bool keep_going = true;
      if (suffix_ok(word_, threshold_)) keep_going = grow();
      word_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  bool finish() {
    if (!circular_ok(word_, threshold_)) return true;
    ++emitted_;
    bool more = sink_(validate_kautz(word_, 3));
    if (config_.limit && emitted_ >= *config_.limit) return false;
    return more;
  }

  const GeneratorConfig& config_;
  const WordSink& sink_;
  PowerThreshold threshold_;
  std::mt19937_64 rng_;
  std::vector<Symbol> word_;
  std::size_t emitted_ = 0;
};

}  // namespace

std::array<AutomatonState, 6> automaton_states() {
  return {{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
}

std::array<AutomatonState, 2> automaton_successors(AutomatonState s) {
  std::array<AutomatonState, 2> out{};
  std::size_t i = 0;
  for (Symbol c = 0; c < 3; ++c) {
    if (c != s.second) out[i++] = {s.second, c};
  }
  return out;
}

bool suffix_power_ok(const KautzWord& prefix, const Rational& alpha,
                     bool strict) {
  return suffix_ok(prefix.letters(), PowerThreshold(alpha, strict));
}

std::size_t generate(const GeneratorConfig& config, const WordSink& sink) {
  if (config.length < 2) {
    throw Error(ErrorCode::InvalidArgument, "generated length must be >= 2");
  }
  if (config.limit && *config.limit == 0) return 0;
  return Backtracker(config, sink).run();
}

std::vector<KautzWord> generate_all(const GeneratorConfig& config) {
  std::vector<KautzWord> out;
  generate(config, [&](const KautzWord& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

KautzWord canonicalize(const KautzWord& w) {
  if (w.alphabet_size() > 3) {
    bool ternary = std::all_of(w.letters().begin(), w.letters().end(),
                               [](Symbol s) { return s < 3; });
    if (!ternary) {
      throw Error(ErrorCode::InvalidArgument, "canonicalize needs a ternary word");
    }
  }
  const std::size_t n = w.size();
  if (n >= 2 && w[0] == w[n - 1]) {
    throw Error(ErrorCode::NotCircularlyValid,
                "rotation of " + w.str() + " repeats a letter", n - 1);
  }
  std::array<Symbol, 3> perm{0, 1, 2};
  std::vector<Symbol> best;
  std::vector<Symbol> candidate(n);
  do {
    for (std::size_t rot = 0; rot < n; ++rot) {
      for (std::size_t i = 0; i < n; ++i) {
        candidate[i] = perm[w[(rot + i) % n]];
      }
      if (best.empty() || candidate < best) best = candidate;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return validate_kautz(best, 3);
}

}  // namespace kautz
