#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kautz/bounds.hpp"
#include "kautz/congestion.hpp"
#include "kautz/layer_table.hpp"
#include "kautz/word_gen.hpp"

namespace kautz {

/// Bumped whenever counting semantics change; part of every cache key.
inline constexpr std::string_view kEngineVersion = "kautz-engine-1";

inline constexpr std::string_view kClassCsvHeader =
    "word,d,D,cong,tau,ratio,circular_square_free,unbordered,full_row_k";

/// cong / tau rounded half-up to `places` decimals.
std::string ratio_string(Count cong, Count tau, unsigned places);

std::string to_csv(const ClassReport& report);
/// Parses the CSV written by to_csv; the label is not part of the format.
ClassReport parse_class_csv(std::string_view text);

nlohmann::json to_json(const LayerTable& table);
LayerTable layer_table_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClassReport& report);
nlohmann::json to_json(const SparsityReport& report);
nlohmann::json to_json(const BoundCertificate& cert);
nlohmann::json to_json(const UdBound& bound);
nlohmann::json generator_envelope(const GeneratorConfig& config,
                                  const std::vector<KautzWord>& words,
                                  bool exhaustive);

std::string_view to_string(Side side);
Side parse_side(std::string_view text);

/// Per-edge LayerTable memo on disk, one JSON file per
/// (d, D, word, engine version).
class LayerCache {
 public:
  explicit LayerCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::optional<LayerTable> load(const KautzEdge& edge) const;
  void store(const KautzEdge& edge, const LayerTable& table) const;
  std::filesystem::path path_for(const KautzEdge& edge) const;

 private:
  std::filesystem::path dir_;
};

/// congestion() through an optional cache.
LayerTable cached_congestion(const KautzEdge& edge, const EngineOptions& options,
                             const LayerCache* cache);

}  // namespace kautz
