#include "kautz/congestion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <thread>

#include "kautz/bounds.hpp"
#include "kautz/error.hpp"
#include "kautz/word_gen.hpp"
#include "parallel.hpp"

namespace kautz {

namespace {

using Packed = unsigned __int128;

void require_layer(const KautzEdge& edge, std::size_t k) {
  if (k < 1 || k > edge.diameter()) {
    throw Error(ErrorCode::PositionOutOfRange,
                "layer k = " + std::to_string(k) + " outside 1.." +
                    std::to_string(edge.diameter()));
  }
}

/// Every Kautz sequence of `length` letters over {0..d}. `before` is the
/// letter that must differ from the first one (or -1), `after` the letter
/// that must differ from the last one (or -1).
std::vector<std::vector<Symbol>> flank_sequences(int d, std::size_t length,
                                                 int before, int after) {
  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> cur;
  cur.reserve(length);
  auto walk = [&](auto&& self) -> void {
    if (cur.size() == length) {
      if (length == 0 || after < 0 || cur.back() != after) out.push_back(cur);
      return;
    }
    for (int c = 0; c <= d; ++c) {
      const int prev = cur.empty() ? before : cur.back();
      if (c == prev) continue;
      cur.push_back(static_cast<Symbol>(c));
      self(self);
      cur.pop_back();
    }
  };
  walk(walk);
  return out;
}

class LayerEnumerator {
 public:
  LayerEnumerator(const KautzEdge& edge, std::size_t k)
      : edge_(edge), k_(k), diameter_(edge.diameter()) {
    bits_ = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(edge.d())));
    if (bits_ * diameter_ > 128) {
      throw Error(ErrorCode::TooLarge, "vertex does not fit in 128 packed bits");
    }
    // Overlap lengths j in (D-k, D] would make the walk shorter than k.
    for (std::size_t j = diameter_ - k + 1; j <= diameter_; ++j) {
      masks_.push_back(mask(j));
      shifts_.push_back(bits_ * (diameter_ - j));
    }
  }

  /// Left flanks for position t, in lexicographic order.
  std::vector<Packed> sources(std::size_t t) const {
    auto a = edge_.word().letters();
    std::vector<Packed> xs;
    for (const auto& left : flank_sequences(edge_.d(), t - 1, -1, a[0])) {
      Packed x = 0;
      for (Symbol s : left) x = push(x, s);
      for (std::size_t i = 0; i + t <= diameter_; ++i) x = push(x, a[i]);
      xs.push_back(x);
    }
    return xs;
  }

  std::vector<Packed> targets(std::size_t t) const {
    auto a = edge_.word().letters();
    std::vector<Packed> ys;
    for (const auto& right : flank_sequences(edge_.d(), k_ - t, a[diameter_], -1)) {
      Packed y = 0;
      for (std::size_t i = k_ - t + 1; i <= diameter_; ++i) y = push(y, a[i]);
      for (Symbol s : right) y = push(y, s);
      ys.push_back(y);
    }
    return ys;
  }

  Count count(std::span<const Packed> xs, std::span<const Packed> ys) const {
    std::uint64_t hits = 0;
    const std::size_t checks = masks_.size();
    for (Packed x : xs) {
      for (Packed y : ys) {
        bool geodesic = true;
        for (std::size_t i = 0; i < checks; ++i) {
          if ((x & masks_[i]) == (y >> shifts_[i])) {
            geodesic = false;
            break;
          }
        }
        hits += geodesic ? 1U : 0U;
      }
    }
    return hits;
  }

 private:
  Packed push(Packed acc, Symbol s) const { return (acc << bits_) | s; }
  Packed mask(std::size_t letters) const {
    const unsigned width = bits_ * static_cast<unsigned>(letters);
    return width >= 128 ? ~Packed{0} : (Packed{1} << width) - 1;
  }

  const KautzEdge& edge_;
  std::size_t k_;
  std::size_t diameter_;
  unsigned bits_ = 0;
  std::vector<Packed> masks_;
  std::vector<unsigned> shifts_;
};

std::vector<Count> enumerate_layer(const KautzEdge& edge, std::size_t k,
                                   const EngineOptions& options) {
  const double work = layer_work(edge.d(), k);
  if (options.tier == BudgetTier::desk && work > kDeskWorkCap) {
    throw BudgetError("layer " + std::to_string(k) + " of " + edge.word().str() +
                          " needs " + std::to_string(work) +
                          " flank completions; desk cap is 2^36 (use the long-run tier)",
                      work, kDeskWorkCap);
  }
  LayerEnumerator enumerator(edge, k);
  const unsigned threads = resolve_threads(options.threads);

  // Tasks: (position t, block of left flanks). Blocks follow the leading
  // left-flank letters because the sources come out in lexicographic order.
  struct Task {
    std::size_t t;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<std::vector<Packed>> xs(k + 1);
  std::vector<std::vector<Packed>> ys(k + 1);
  std::vector<Task> tasks;
  for (std::size_t t = 1; t <= k; ++t) {
    xs[t] = enumerator.sources(t);
    ys[t] = enumerator.targets(t);
    const std::size_t blocks = std::min<std::size_t>(xs[t].size(), 4 * threads);
    for (std::size_t b = 0; b < blocks; ++b) {
      tasks.push_back({t, xs[t].size() * b / blocks, xs[t].size() * (b + 1) / blocks});
    }
  }
  auto partial = detail::parallel_map<Count>(tasks.size(), threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    std::span<const Packed> left(xs[task.t]);
    return enumerator.count(left.subspan(task.begin, task.end - task.begin), ys[task.t]);
  });
  std::vector<Count> row(k, 0);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    row[tasks[i].t - 1] = checked_add(row[tasks[i].t - 1], partial[i]);
  }
  return row;
}

// One overlap length j that would shorten the walk: the left flank must end
// with `left` and the right flank must start with `right`.
struct Constraint {
  std::vector<Symbol> left;
  std::vector<Symbol> right;
};

bool ends_with(const std::vector<Symbol>& s, const std::vector<Symbol>& suffix) {
  return suffix.size() <= s.size() &&
         std::equal(suffix.begin(), suffix.end(), s.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

bool starts_with(const std::vector<Symbol>& s, const std::vector<Symbol>& prefix) {
  return prefix.size() <= s.size() && std::equal(prefix.begin(), prefix.end(), s.begin());
}

Count cylinder_position(const KautzEdge& edge, std::size_t k, std::size_t t) {
  const std::size_t diameter = edge.diameter();
  const auto d = static_cast<Count>(edge.d());
  auto a = edge.word().letters();
  const std::size_t left_len = t - 1;
  const std::size_t right_len = k - t;
  const std::size_t edge_begin = t - 1;            // walk index of a_0
  const std::size_t right_begin = t + diameter;    // walk index of the first right letter

  std::vector<Constraint> constraints;
  for (std::size_t j = diameter - k + 1; j <= diameter; ++j) {
    const std::size_t shift = k + j - diameter;
    Constraint c;
    bool possible = true;
    for (std::size_t i = 0; i < j && possible; ++i) {
      const std::size_t p1 = diameter - j + i;
      const std::size_t p2 = p1 + shift;
      if (p1 < edge_begin) {
        // p2 always lands inside the edge here.
        c.left.push_back(a[p2 - edge_begin]);
      } else if (p2 < right_begin) {
        possible = a[p1 - edge_begin] == a[p2 - edge_begin];
      } else {
        c.right.push_back(a[p1 - edge_begin]);
      }
    }
    if (!possible) continue;
    if (!c.left.empty() && c.left.back() == a[0]) continue;
    if (!c.right.empty() && c.right.front() == a[diameter]) continue;
    constraints.push_back(std::move(c));
  }

  auto left_cylinder = [&](const std::vector<Symbol>& s) {
    return checked_pow(d, static_cast<unsigned>(left_len - s.size()));
  };
  auto right_cylinder = [&](const std::vector<Symbol>& p) {
    return checked_pow(d, static_cast<unsigned>(right_len - p.size()));
  };

  // Distinct required left suffixes, longest first.
  std::vector<std::vector<Symbol>> suffixes;
  for (const auto& c : constraints) {
    if (std::find(suffixes.begin(), suffixes.end(), c.left) == suffixes.end()) {
      suffixes.push_back(c.left);
    }
  }
  std::sort(suffixes.begin(), suffixes.end(),
            [](const auto& x, const auto& y) { return x.size() > y.size(); });

  // exact[i]: left flanks whose longest matching required suffix is suffixes[i].
  std::vector<Count> exact(suffixes.size(), 0);
  Count blocked = 0;
  for (std::size_t i = 0; i < suffixes.size(); ++i) {
    Count nested = 0;
    for (std::size_t h = 0; h < i; ++h) {
      if (suffixes[h].size() > suffixes[i].size() && ends_with(suffixes[h], suffixes[i])) {
        nested = checked_add(nested, exact[h]);
      }
    }
    exact[i] = left_cylinder(suffixes[i]) - nested;

    // Right flanks hit by any constraint active for this left class.
    std::vector<const std::vector<Symbol>*> prefixes;
    for (const auto& c : constraints) {
      if (ends_with(suffixes[i], c.left)) prefixes.push_back(&c.right);
    }
    std::sort(prefixes.begin(), prefixes.end(),
              [](const auto* x, const auto* y) { return x->size() < y->size(); });
    std::vector<const std::vector<Symbol>*> minimal;
    Count covered = 0;
    for (const auto* p : prefixes) {
      bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                   [&](const auto* m) { return starts_with(*p, *m); });
      if (dominated) continue;
      minimal.push_back(p);
      covered = checked_add(covered, right_cylinder(*p));
    }
    blocked = checked_add(blocked, checked_mul(exact[i], covered));
  }
  const Count total = checked_mul(checked_pow(d, static_cast<unsigned>(left_len)),
                                  checked_pow(d, static_cast<unsigned>(right_len)));
  return total - blocked;
}

std::vector<Count> cylinder_layer(const KautzEdge& edge, std::size_t k) {
  std::vector<Count> row(k);
  for (std::size_t t = 1; t <= k; ++t) row[t - 1] = cylinder_position(edge, k, t);
  return row;
}

}  // namespace

double layer_work(int d, std::size_t k) {
  return std::pow(static_cast<double>(d), static_cast<double>(k - 1)) *
         static_cast<double>(k);
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<Count> count_layer(const KautzEdge& edge, std::size_t k,
                               const EngineOptions& options) {
  require_layer(edge, k);
  if (options.method == CountMethod::cylinder) return cylinder_layer(edge, k);
  return enumerate_layer(edge, k, options);
}

LayerTable congestion(const KautzEdge& edge, const EngineOptions& options) {
  const std::size_t diameter = edge.diameter();
  if (options.method == CountMethod::enumerate && options.tier == BudgetTier::desk) {
    // Refuse up front rather than after the cheap layers.
    const double work = layer_work(edge.d(), diameter);
    if (work > kDeskWorkCap) {
      throw BudgetError("congestion of " + edge.word().str() + " needs " +
                            std::to_string(work) +
                            " flank completions in its top layer; desk cap is 2^36",
                        work, kDeskWorkCap);
    }
  }
  std::vector<std::vector<Count>> rows;
  rows.reserve(diameter);
  for (std::size_t k = 1; k <= diameter; ++k) rows.push_back(count_layer(edge, k, options));
  return LayerTable(edge.d(), diameter, std::move(rows));
}

DeficitTable deficits(const KautzEdge& edge, const EngineOptions& options) {
  const std::size_t diameter = edge.diameter();
  const Count full = checked_pow(static_cast<Count>(edge.d()),
                                 static_cast<unsigned>(diameter - 1));
  DeficitTable table;
  for (Count n : count_layer(edge, diameter, options)) {
    table.delta.push_back(full - n);
    table.total = checked_add(table.total, full - n);
  }
  return table;
}

bool is_full_row(const KautzEdge& edge, std::size_t k, const EngineOptions& options) {
  const Count full = checked_pow(static_cast<Count>(edge.d()), static_cast<unsigned>(k - 1));
  auto row = count_layer(edge, k, options);
  return std::all_of(row.begin(), row.end(), [&](Count n) { return n == full; });
}

EdgeClass EdgeClass::all_edges() { return {Kind::all, 0, {}, "all"}; }
EdgeClass EdgeClass::circular_square_free() {
  return {Kind::circular_square_free, 0, {}, "circular-square-free"};
}
EdgeClass EdgeClass::unbordered() { return {Kind::unbordered, 0, {}, "unbordered"}; }
EdgeClass EdgeClass::full_row(std::size_t k) {
  return {Kind::full_row, k, {}, "full-row:" + std::to_string(k)};
}
EdgeClass EdgeClass::custom(std::string label,
                            std::function<bool(const KautzEdge&)> predicate,
                            std::size_t full_row_k) {
  return {Kind::predicate, full_row_k, std::move(predicate), std::move(label)};
}

Count ClassReport::min_cong() const {
  if (records.empty()) return 0;
  return std::min_element(records.begin(), records.end(),
                          [](const auto& a, const auto& b) { return a.cong < b.cong; })
      ->cong;
}

Count ClassReport::max_cong() const {
  if (records.empty()) return 0;
  return std::max_element(records.begin(), records.end(),
                          [](const auto& a, const auto& b) { return a.cong < b.cong; })
      ->cong;
}

Rational ClassReport::mean_ratio() const {
  if (records.empty() || tau == 0) return 0;
  BigInt total = 0;
  for (const auto& r : records) total += to_bigint(r.cong);
  return Rational(total, to_bigint(tau) * records.size());
}

std::vector<KautzWord> all_edge_words(int d, std::size_t diameter) {
  std::vector<KautzWord> out;
  for (const auto& letters : flank_sequences(d, diameter + 1, -1, -1)) {
    out.push_back(validate_kautz(letters, d + 1));
  }
  return out;
}

ClassReport scan_class(int d, std::size_t diameter, const EdgeClass& cls,
                       const EngineOptions& options, const LayerSource& source) {
  if (d < 2 || diameter < 1) throw Error(ErrorCode::InvalidArgument, "need d >= 2, D >= 1");
  if (cls.kind == EdgeClass::Kind::full_row &&
      (cls.full_row_k < 1 || cls.full_row_k > diameter)) {
    throw Error(ErrorCode::PositionOutOfRange, "full-row layer outside 1..D");
  }

  std::vector<KautzWord> candidates;
  if (cls.kind == EdgeClass::Kind::circular_square_free) {
    GeneratorConfig config;
    config.length = diameter + 1;
    config.alpha = 2;
    candidates = generate_all(config);
  } else {
    const double edges = (d + 1) * std::pow(static_cast<double>(d), static_cast<double>(diameter));
    if (options.tier == BudgetTier::desk && edges > kDeskEdgeCap) {
      throw BudgetError("class scan over " + std::to_string(edges) +
                            " edges exceeds the desk cap of 2^24",
                        edges, kDeskEdgeCap);
    }
    candidates = all_edge_words(d, diameter);
  }

  ClassReport report;
  report.d = d;
  report.diameter = diameter;
  report.label = cls.label;
  report.tau = makespan_tau(d, diameter);
  for (const auto& word : candidates) {
    KautzEdge edge(d, diameter, word);
    switch (cls.kind) {
      case EdgeClass::Kind::unbordered:
        if (!is_unbordered(edge.word())) continue;
        break;
      case EdgeClass::Kind::full_row:
        if (!is_full_row(edge, cls.full_row_k, options)) continue;
        break;
      case EdgeClass::Kind::predicate:
        if (cls.predicate && !cls.predicate(edge)) continue;
        break;
      default:
        break;
    }
    const Count cong = source ? source(edge).cong() : congestion(edge, options).cong();
    ClassRecord record{edge.word(), cong,
                       is_circular_square_free(edge.word()), is_unbordered(edge.word()),
                       std::nullopt};
    if (cls.full_row_k > 0) record.full_row_k = cls.full_row_k;
    report.records.push_back(std::move(record));
  }
  return report;
}

}  // namespace kautz
