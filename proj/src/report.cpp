#include "kautz/report.hpp"

#include <fstream>
#include <sstream>

#include "kautz/error.hpp"

namespace kautz {

using nlohmann::json;

std::string ratio_string(Count cong, Count tau, unsigned places) {
  return format_decimal(Rational(to_bigint(cong), to_bigint(tau)), places);
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  for (;;) {
    auto end = line.find(sep, begin);
    out.emplace_back(line.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw Error(ErrorCode::InvalidArgument, "expected true/false, got '" + s + "'");
}

std::size_t parse_size(const std::string& s) {
  return static_cast<std::size_t>(parse_count(s));
}

json count_array(const std::vector<Count>& row) {
  json out = json::array();
  for (Count c : row) out.push_back(to_string(c));
  return out;
}

}  // namespace

std::string to_csv(const ClassReport& report) {
  std::ostringstream out;
  out << kClassCsvHeader << '\n';
  for (const auto& r : report.records) {
    out << r.word.str() << ',' << report.d << ',' << report.diameter << ','
        << to_string(r.cong) << ',' << to_string(report.tau) << ','
        << ratio_string(r.cong, report.tau, 4) << ','
        << (r.circular_square_free ? "true" : "false") << ','
        << (r.unbordered ? "true" : "false") << ','
        << (r.full_row_k ? std::to_string(*r.full_row_k) : std::string()) << '\n';
  }
  return out.str();
}

ClassReport parse_class_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kClassCsvHeader) {
    throw Error(ErrorCode::InvalidArgument, "missing class report CSV header");
  }
  ClassReport report;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split(line, ',');
    if (f.size() != 9) {
      throw Error(ErrorCode::InvalidArgument, "class report row needs 9 fields: " + line);
    }
    report.d = static_cast<int>(parse_size(f[1]));
    report.diameter = parse_size(f[2]);
    report.tau = parse_count(f[4]);
    ClassRecord record{KautzWord::parse(f[0], report.d + 1), parse_count(f[3]),
                       parse_bool(f[6]), parse_bool(f[7]), std::nullopt};
    if (!f[8].empty()) record.full_row_k = parse_size(f[8]);
    if (ratio_string(record.cong, report.tau, 4) != f[5]) {
      throw Error(ErrorCode::InvalidArgument, "ratio column disagrees with cong/tau: " + line);
    }
    report.records.push_back(std::move(record));
  }
  return report;
}

json to_json(const LayerTable& table) {
  json rows = json::array();
  json u = json::array();
  for (std::size_t k = 1; k <= table.diameter(); ++k) {
    rows.push_back(count_array(table.layer(k)));
    u.push_back(to_string(table.u(k)));
  }
  return {{"d", table.d()},
          {"D", table.diameter()},
          {"N", rows},
          {"U", u},
          {"cong", to_string(table.cong())}};
}

LayerTable layer_table_from_json(const json& j) {
  std::vector<std::vector<Count>> rows;
  for (const auto& row : j.at("N")) {
    std::vector<Count> parsed;
    for (const auto& cell : row) parsed.push_back(parse_count(cell.get<std::string>()));
    rows.push_back(std::move(parsed));
  }
  return LayerTable(j.at("d").get<int>(), j.at("D").get<std::size_t>(), std::move(rows));
}

json to_json(const ClassReport& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"word", r.word.str()},
                       {"cong", to_string(r.cong)},
                       {"ratio", ratio_string(r.cong, report.tau, 4)},
                       {"circular_square_free", r.circular_square_free},
                       {"unbordered", r.unbordered},
                       {"full_row_k", r.full_row_k ? json(*r.full_row_k) : json(nullptr)}});
  }
  return {{"d", report.d},
          {"D", report.diameter},
          {"class", report.label},
          {"tau", to_string(report.tau)},
          {"count", report.count()},
          {"min_cong", to_string(report.min_cong())},
          {"max_cong", to_string(report.max_cong())},
          {"mean_ratio", format_rational(report.mean_ratio())},
          {"beats_tau", !report.records.empty() && report.max_cong() > report.tau},
          {"records", records}};
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::forward: return "forward";
    case Side::reversed: return "reversed";
    case Side::two_sided_max: return "two-sided";
  }
  return "forward";
}

Side parse_side(std::string_view text) {
  if (text == "forward") return Side::forward;
  if (text == "reversed") return Side::reversed;
  if (text == "two-sided" || text == "two-sided-max") return Side::two_sided_max;
  throw Error(ErrorCode::InvalidArgument, "unknown side '" + std::string(text) + "'");
}

json to_json(const SparsityReport& report) {
  json positions = json::object();
  for (const auto& [t, set] : report.per_position) positions[std::to_string(t)] = set.values;
  return {{"word", report.edge.word().str()},
          {"d", report.edge.d()},
          {"D", report.edge.diameter()},
          {"side", to_string(report.side)},
          {"realized_side", to_string(report.realized)},
          {"R", positions},
          {"omega", format_rational(report.omega)},
          {"omega_forward", format_rational(report.omega_forward)},
          {"omega_reversed", format_rational(report.omega_reversed)},
          {"delta_bound", format_rational(report.delta_bound)},
          {"sufficiency", report.sufficiency ? json(*report.sufficiency) : json(nullptr)}};
}

json to_json(const BoundCertificate& cert) {
  return {{"U_D", to_string(cert.ud)},
          {"cong_lower", format_rational(cert.cong_lower)},
          {"tau", to_string(cert.tau)},
          {"beats_tau", cert.beats_tau},
          {"C_d", format_rational(cert.c_d)},
          {"D0", cert.d0}};
}

json to_json(const UdBound& bound) {
  return {{"U_D_lower", bound.bound.str()},
          {"universal_74", bound.universal ? json(format_rational(*bound.universal))
                                           : json(nullptr)}};
}

json generator_envelope(const GeneratorConfig& config, const std::vector<KautzWord>& words,
                        bool exhaustive) {
  json list = json::array();
  for (const auto& w : words) list.push_back(w.str());
  json out = {{"length", config.length},
              {"alpha", format_rational(config.alpha)},
              {"strict", config.strict},
              {"count", words.size()},
              {"words", list}};
  if (exhaustive) out["nonexistent"] = words.empty();
  return out;
}

std::filesystem::path LayerCache::path_for(const KautzEdge& edge) const {
  return dir_ / ("d" + std::to_string(edge.d()) + "_D" + std::to_string(edge.diameter()) +
                 "_" + edge.word().str() + "_" + std::string(kEngineVersion) + ".json");
}

std::optional<LayerTable> LayerCache::load(const KautzEdge& edge) const {
  std::ifstream in(path_for(edge));
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("engine") != kEngineVersion || j.at("word") != edge.word().str()) {
      return std::nullopt;
    }
    return layer_table_from_json(j.at("table"));
  } catch (const std::exception&) {
    // A corrupt entry is recomputed and overwritten.
    return std::nullopt;
  }
}

void LayerCache::store(const KautzEdge& edge, const LayerTable& table) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(edge);
  const auto tmp = std::filesystem::path(target.string() + ".tmp");
  {
    std::ofstream out(tmp);
    out << json{{"engine", kEngineVersion},
                {"word", edge.word().str()},
                {"table", to_json(table)}}
               .dump()
        << '\n';
  }
  std::filesystem::rename(tmp, target);
}

LayerTable cached_congestion(const KautzEdge& edge, const EngineOptions& options,
                             const LayerCache* cache) {
  if (cache) {
    if (auto hit = cache->load(edge)) return *hit;
  }
  LayerTable table = congestion(edge, options);
  if (cache) cache->store(edge, table);
  return table;
}

}  // namespace kautz
