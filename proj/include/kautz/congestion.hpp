#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kautz/graph.hpp"
#include "kautz/layer_table.hpp"
#include "kautz/numeric.hpp"

namespace kautz {

enum class BudgetTier { desk, long_run };

/// How N(e; k, .) is obtained.
///  - enumerate: walks every flank completion and tests the overlap of the
///    resulting endpoints (the reference method; subject to the work budget).
///  - cylinder: counts the same completions without listing them. Each
///    overlap length that would shorten the walk pins a suffix of the left
///    flank and a prefix of the right flank; those constraint sets are nested
///    or disjoint, so their union is counted exactly in polynomial time.
enum class CountMethod { enumerate, cylinder };

struct EngineOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  BudgetTier tier = BudgetTier::desk;
  CountMethod method = CountMethod::enumerate;
};

/// Desk-tier cap on d^(k-1) * k flank completions per layer.
inline constexpr double kDeskWorkCap = 68719476736.0;  // 2^36

/// Work units (flank completions) that enumerating layer k costs.
double layer_work(int d, std::size_t k);
unsigned resolve_threads(unsigned requested);

std::vector<Count> count_layer(const KautzEdge& edge, std::size_t k,
                               const EngineOptions& options = {});
LayerTable congestion(const KautzEdge& edge, const EngineOptions& options = {});

struct DeficitTable {
  std::vector<Count> delta;  // delta[t-1] = d^(D-1) - N(e; D, t)
  Count total = 0;
};

DeficitTable deficits(const KautzEdge& edge, const EngineOptions& options = {});
bool is_full_row(const KautzEdge& edge, std::size_t k,
                 const EngineOptions& options = {});

/// Edge families that scan_class can walk.
struct EdgeClass {
  enum class Kind { all, circular_square_free, unbordered, full_row, predicate };

  Kind kind = Kind::all;
  std::size_t full_row_k = 0;
  std::function<bool(const KautzEdge&)> predicate;
  std::string label;

  static EdgeClass all_edges();
  static EdgeClass circular_square_free();
  static EdgeClass unbordered();
  static EdgeClass full_row(std::size_t k);
  /// Arbitrary filter over all edges; `full_row_k`, when set, is reported in
  /// each record and must be implied by the predicate.
  static EdgeClass custom(std::string label,
                          std::function<bool(const KautzEdge&)> predicate,
                          std::size_t full_row_k = 0);
};

struct ClassRecord {
  KautzWord word;
  Count cong = 0;
  bool circular_square_free = false;
  bool unbordered = false;
  std::optional<std::size_t> full_row_k;
};

struct ClassReport {
  int d = 0;
  std::size_t diameter = 0;
  std::string label;
  Count tau = 0;
  std::vector<ClassRecord> records;

  std::size_t count() const noexcept { return records.size(); }
  Count min_cong() const;
  Count max_cong() const;
  Rational mean_ratio() const;  // mean of cong / tau, exact
};

/// Desk-tier cap on the number of edges a class scan may visit.
inline constexpr double kDeskEdgeCap = 16777216.0;  // 2^24

/// Every edge-word of K(d, D) in lexicographic order.
std::vector<KautzWord> all_edge_words(int d, std::size_t diameter);

/// Supplies the full LayerTable of an edge; lets callers put a cache in
/// front of the engine.
using LayerSource = std::function<LayerTable(const KautzEdge&)>;

ClassReport scan_class(int d, std::size_t diameter, const EdgeClass& cls,
                       const EngineOptions& options = {},
                       const LayerSource& source = {});

}  // namespace kautz
