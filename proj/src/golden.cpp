#include "kautz/golden.hpp"

#include <array>
#include <sstream>

#include "kautz/bounds.hpp"
#include "kautz/error.hpp"
#include "kautz/report.hpp"

namespace kautz {

namespace {

constexpr std::array<CongestionRow, 31> kCongestionRows{{
    {4, "01210", "45", "1.023", false},
    {5, "012102", "113", "1.009", true},
    {6, "0121020", "299", "1.099", false},
    {7, "01210201", "691", "1.080", true},
    {8, "012102120", "1753", "1.191", false},
    {9, "0120210201", "3953", "1.188", false},
    {10, "01210212021", "8559", "1.153", true},
    {11, "012010212021", "18383", "1.122", true},
    {12, "0121021202102", "42307", "1.180", true},
    {13, "01210201021012", "96546", "1.241", false},
    {14, "010201210120212", "197297", "1.175", true},
    {15, "0121020102120102", "431623", "1.197", true},
    {16, "01210201021010212", "893023", "1.160", false},
    {17, "012021020102120102", "1984207", "1.211", true},
    {18, "0102120121021202102", "4218027", "1.214", true},
    {19, "01202120121021202102", "9022627", "1.229", true},
    {20, "012102120102101202102", "19337955", "1.250", true},
    {21, "0120210201210212012102", "39896619", "1.227", true},
    {22, "01210212021020102120102", "84835399", "1.245", true},
    {23, "010212010201210212012102", "173173275", "1.214", true},
    {24, "0102120210201210212012102", "367958155", "1.236", true},
    {25, "01021012010201210212012102", "764885203", "1.232", true},
    {26, "010210120210201210212012102", "1601680339", "1.240", true},
    {27, "0120212010212021020102120102", "3374890767", "1.257", true},
    {28, "01021012102012101202120121012", "6960049727", "1.250", true},
    {29, "010210120212010201210212012102", "14422073299", "1.249", true},
    {30, "0121020102101201021202101201021", "30100578799", "1.260", true},
    {31, "01201021012102120210201210212021", "61391316303", "1.243", true},
    {32, "012021020121021201021012102120102", "128665668047", "1.261", true},
    {33, "0102012021201020121012021020121012", "262444521151", "1.247", true},
    {34, "01210201021012102120210201210212021", "548535054079", "1.265", true},
}};

constexpr std::array<FamilyRow, 2> kFamilyRows{{
    {9, "3328", 414, 222, 24, "1.1403"},
    {10, "7424", 630, 240, 30, "1.1487"},
}};

constexpr std::array<ClassSummaryRow, 1> kClassRows{{
    {11, 72, "18383", "19911"},
}};

using Fields = std::vector<std::pair<std::string, std::string>>;

LayerTable full_table(const KautzEdge& edge, const EngineOptions& options,
                      const LayerSource& source) {
  return source ? source(edge) : congestion(edge, options);
}

void refuse_if_over_budget(std::size_t diameter, const EngineOptions& options) {
  if (options.tier == BudgetTier::long_run || options.method == CountMethod::cylinder) return;
  const double work = layer_work(2, diameter);
  if (work > kDeskWorkCap) {
    throw BudgetError("row D=" + std::to_string(diameter) +
                          " needs the long-run tier (layer work exceeds 2^36)",
                      work, kDeskWorkCap);
  }
}

void finish(Reproduction& result) {
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.expected.size(); ++i) {
      if (row.expected[i] != row.actual[i]) {
        result.diff.push_back({row.key, row.expected[i].first, row.expected[i].second,
                               row.actual[i].second});
      }
    }
  }
}

}  // namespace

std::span<const CongestionRow> golden_congestion_rows() { return kCongestionRows; }
std::span<const FamilyRow> golden_family_rows() { return kFamilyRows; }
std::span<const ClassSummaryRow> golden_class_rows() { return kClassRows; }

GoldenTable parse_golden_table(std::string_view name) {
  if (name == "appendix-a") return GoldenTable::appendix_a;
  if (name == "table-1") return GoldenTable::table_1;
  if (name == "section-7-1") return GoldenTable::section_7_1;
  throw Error(ErrorCode::InvalidArgument, "unknown table '" + std::string(name) + "'");
}

std::string_view to_string(GoldenTable table) {
  switch (table) {
    case GoldenTable::appendix_a: return "appendix-a";
    case GoldenTable::table_1: return "table-1";
    case GoldenTable::section_7_1: return "section-7-1";
  }
  return "appendix-a";
}

std::size_t default_max_diameter(GoldenTable table) {
  switch (table) {
    case GoldenTable::appendix_a: return 15;
    case GoldenTable::table_1: return 10;
    case GoldenTable::section_7_1: return 11;
  }
  return 15;
}

Reproduction reproduce(GoldenTable table, std::size_t max_diameter,
                       const EngineOptions& options, const LayerSource& source) {
  Reproduction result{table, max_diameter, {}, {}};
  switch (table) {
    case GoldenTable::appendix_a: {
      for (const auto& row : kCongestionRows) {
        if (row.diameter <= max_diameter) refuse_if_over_budget(row.diameter, options);
      }
      for (const auto& row : kCongestionRows) {
        if (row.diameter > max_diameter) continue;
        const auto edge = KautzEdge::parse(2, row.diameter, row.word);
        const Count cong = full_table(edge, options, source).cong();
        const Count tau = makespan_tau(2, row.diameter);
        result.rows.push_back(
            {"D=" + std::to_string(row.diameter),
             Fields{{"word", std::string(row.word)},
                    {"cong", std::string(row.cong)},
                    {"ratio", std::string(row.ratio)}},
             Fields{{"word", edge.word().str()},
                    {"cong", to_string(cong)},
                    {"ratio", ratio_string(cong, tau, 3)}}});
      }
      break;
    }
    case GoldenTable::table_1: {
      for (const auto& row : kFamilyRows) {
        if (row.diameter > max_diameter) continue;
        const auto k = row.diameter - 2;
        const auto family = scan_class(2, row.diameter, EdgeClass::full_row(k), options, source);
        std::size_t unbordered = 0;
        ClassReport g;
        g.tau = family.tau;
        for (const auto& rec : family.records) {
          if (!rec.unbordered) continue;
          ++unbordered;
          if (is_square_free(rec.word)) g.records.push_back(rec);
        }
        const std::string mean =
            g.records.empty() ? std::string("-") : format_decimal(g.mean_ratio(), 4);
        result.rows.push_back({"D=" + std::to_string(row.diameter),
                               Fields{{"tau", std::string(row.tau)},
                                      {"full_row", std::to_string(row.full_row)},
                                      {"unbordered", std::to_string(row.unbordered)},
                                      {"square_free", std::to_string(row.square_free)},
                                      {"mean_ratio", std::string(row.mean_ratio)}},
                               Fields{{"tau", to_string(family.tau)},
                                      {"full_row", std::to_string(family.count())},
                                      {"unbordered", std::to_string(unbordered)},
                                      {"square_free", std::to_string(g.count())},
                                      {"mean_ratio", mean}}});
      }
      break;
    }
    case GoldenTable::section_7_1: {
      for (const auto& row : kClassRows) {
        if (row.diameter > max_diameter) continue;
        const auto report =
            scan_class(2, row.diameter, EdgeClass::circular_square_free(), options, source);
        bool all_beat = true;
        for (const auto& rec : report.records) all_beat = all_beat && rec.cong > report.tau;
        const bool empty = report.records.empty();
        result.rows.push_back(
            {"D=" + std::to_string(row.diameter),
             Fields{{"count", std::to_string(row.count)},
                    {"min_cong", std::string(row.min_cong)},
                    {"max_cong", std::string(row.max_cong)},
                    {"all_exceed_tau", "true"}},
             Fields{{"count", std::to_string(report.count())},
                    {"min_cong", empty ? std::string("-") : to_string(report.min_cong())},
                    {"max_cong", empty ? std::string("-") : to_string(report.max_cong())},
                    {"all_exceed_tau", !empty && all_beat ? "true" : "false"}}});
      }
      break;
    }
  }
  finish(result);
  return result;
}

nlohmann::json to_json(const Reproduction& result) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& row : result.rows) {
    json expected = json::object();
    json actual = json::object();
    for (const auto& [k, v] : row.expected) expected[k] = v;
    for (const auto& [k, v] : row.actual) actual[k] = v;
    rows.push_back({{"row", row.key}, {"expected", expected}, {"actual", actual},
                    {"match", row.match()}});
  }
  json diff = json::array();
  for (const auto& d : result.diff) {
    diff.push_back({{"row", d.row}, {"field", d.field}, {"expected", d.expected},
                    {"actual", d.actual}});
  }
  return {{"table", to_string(result.table)},
          {"D_max", result.max_diameter},
          {"rows", rows},
          {"diff", diff}};
}

std::string to_text(const Reproduction& result) {
  std::ostringstream out;
  out << "table " << to_string(result.table) << ", D <= " << result.max_diameter << '\n';
  for (const auto& row : result.rows) {
    out << row.key;
    for (std::size_t i = 0; i < row.actual.size(); ++i) {
      out << ' ' << row.actual[i].first << '=' << row.actual[i].second;
      if (row.actual[i] != row.expected[i]) out << " (expected " << row.expected[i].second << ')';
    }
    out << (row.match() ? "  ok" : "  MISMATCH") << '\n';
  }
  out << result.rows.size() << " rows, " << result.diff.size() << " differing fields\n";
  return out.str();
}

}  // namespace kautz
