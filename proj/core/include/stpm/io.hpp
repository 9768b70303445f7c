#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "stpm/approx.hpp"
#include "stpm/miner.hpp"

namespace stpm {

struct CsvData {
  std::vector<std::string> series_ids;
  std::vector<std::vector<double>> columns;  // parallel to series_ids
};

/// Read a CSV whose first column is `timestamp` and remaining columns are one
/// series each. Missing or malformed cells are rejected with the 1-based line
/// and column in the error message.
CsvData read_csv(const std::string& path);

/// Write the companion CSV format with timestamps 1..L.
void write_csv(const std::string& path, const CsvData& data);

/// One pattern with the documented stable field order:
/// events, triples, support, seasons, distances, max_season.
nlohmann::ordered_json pattern_to_json(const MinedPattern& p, const SequenceDatabase& db);

/// The full pattern list as a JSON array in canonical order. Equal mining
/// results serialize to identical bytes.
nlohmann::ordered_json patterns_to_json(const MiningResult& result, const SequenceDatabase& db);

/// Run manifest: resolved thresholds, per-level group/pattern counts, wall
/// time per phase, and the process peak RSS (best effort).
nlohmann::ordered_json manifest_to_json(const MiningResult& result, double wall_seconds);

nlohmann::ordered_json graph_to_json(const CorrelationGraph& g);

/// VmHWM from /proc/self/status, or -1 when unavailable.
long peak_rss_kb();

/// Full CLI/config-file surface of a mining run. A config file is JSON with
/// these field names; command-line flags override file values.
struct RunConfig {
  std::string input;
  int factor_m = 1;
  std::vector<double> thresholds{0.5};  // symbol cut points, applied to every series
  SeasonConfig season;
  RelationConfig relation;
  std::string mode = "exact";  // "exact" | "approx"
  int k_max = 2;
  bool prune_apriori = true;
  bool prune_transitivity = true;
  int threads = 1;
  std::string output;      // patterns JSON path, empty = stdout
  std::string manifest;    // manifest path, empty = skip
  std::string dump_graph;  // correlation graph path, empty = skip
  std::uint64_t seed = 0;

  MinerConfig miner_config() const;
  void validate() const;
};

/// Merge JSON config fields into `cfg`; unknown keys are rejected.
void apply_config_json(RunConfig& cfg, const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

}  // namespace stpm
