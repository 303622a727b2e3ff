#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kautz/congestion.hpp"

namespace kautz {

/// Reference congestion rows for d = 2: one representative edge per D.
struct CongestionRow {
  std::size_t diameter;
  std::string_view word;
  std::string_view cong;
  std::string_view ratio;  // cong / tau, 3 decimals
  bool circular_square_free;
};

/// Reference full-row family sizes for d = 2.
struct FamilyRow {
  std::size_t diameter;
  std::string_view tau;
  std::size_t full_row;    // full-row at D-2
  std::size_t unbordered;  // ... and unbordered
  std::size_t square_free; // ... and square-free
  std::string_view mean_ratio;  // mean cong / tau over the last family, 4 decimals
};

/// Reference circular-square-free class summary.
struct ClassSummaryRow {
  std::size_t diameter;
  std::size_t count;
  std::string_view min_cong;
  std::string_view max_cong;
};

std::span<const CongestionRow> golden_congestion_rows();
std::span<const FamilyRow> golden_family_rows();
std::span<const ClassSummaryRow> golden_class_rows();

enum class GoldenTable { appendix_a, table_1, section_7_1 };

GoldenTable parse_golden_table(std::string_view name);
std::string_view to_string(GoldenTable table);
std::size_t default_max_diameter(GoldenTable table);

struct FieldDiff {
  std::string row;    // e.g. "D=5"
  std::string field;  // e.g. "cong"
  std::string expected;
  std::string actual;
};

struct ReproducedRow {
  std::string key;
  std::vector<std::pair<std::string, std::string>> expected;
  std::vector<std::pair<std::string, std::string>> actual;
  bool match() const { return expected == actual; }
};

struct Reproduction {
  GoldenTable table;
  std::size_t max_diameter;
  std::vector<ReproducedRow> rows;
  std::vector<FieldDiff> diff;
  bool clean() const { return diff.empty(); }
};

/// Recomputes every golden row with D <= max_diameter and diffs it against
/// the embedded copy at the table's printed precision. Rows outside the
/// budget tier raise BudgetError before any work is done.
Reproduction reproduce(GoldenTable table, std::size_t max_diameter,
                       const EngineOptions& options = {},
                       const LayerSource& source = {});

nlohmann::json to_json(const Reproduction& result);
std::string to_text(const Reproduction& result);

}  // namespace kautz
