#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stpm/core_model.hpp"
#include "stpm/miner.hpp"
#include "stpm/relations.hpp"

namespace stpm {

/// One planted event: symbol 1 of `series`, written at the same fine offsets
/// (1-based, within [1, factor_m]) inside every granule of every season.
struct PlantEvent {
  int series = 0;
  int start_offset = 1;
  int end_offset = 1;
};

/// A seasonal pattern to plant. Events use distinct series so their intervals
/// may interleave freely; the realized relations follow from the offsets.
struct PlantSpec {
  std::vector<PlantEvent> events;
  int first_granule = 1;   // first support granule of the first season
  int season_count = 1;
  int season_density = 1;  // support granules per season
  int intra_period = 1;    // gap between consecutive support granules in a season
  int inter_distance = 1;  // distance from a season's last granule to the next season's first
  double noise_rate = 0.0;
};

struct GenSpec {
  int n_series = 1;
  int n_granules = 1;
  int factor_m = 1;
  std::vector<PlantSpec> plants;

  void validate() const;
};

/// All support granules a plant occupies, ascending, 1-based.
std::vector<int> plant_support(const PlantSpec& plant);

/// The pattern the plant realizes, with events in canonical instance order and
/// relations grouped by right event. Throws if some event pair classifies to
/// no relation (infeasible geometry).
struct PlantedPattern {
  std::vector<EventId> events;
  std::vector<RelationKind> rels;
};
PlantedPattern planted_pattern(const GenSpec& spec, const PlantSpec& plant,
                               const RelationConfig& rcfg);

/// Deterministic generation: an all-zero binary background, plants written at
/// the symbolic level, then independent symbol flips at each fine position
/// with probability max over the plants' noise_rate. Series are named
/// "s00", "s01", ... (zero-padded to a fixed width).
SymbolicDatabase generate(const GenSpec& spec, std::uint64_t seed);

/// Raw-value view for end-to-end CSV tests: symbol k becomes the value k, and
/// the matching thresholds are the half-integers between symbols.
std::vector<std::vector<double>> to_raw(const SymbolicDatabase& db);

/// Unstructured random binary databases and mining configs for differential
/// testing against the brute-force miner.
struct RandomDbSpec {
  int min_series = 2, max_series = 6;
  int min_granules = 4, max_granules = 30;
  int min_factor = 2, max_factor = 4;
};

struct RandomDb {
  SymbolicDatabase db;
  int factor_m = 1;
};
RandomDb random_database(const RandomDbSpec& spec, std::uint64_t seed);

/// A small valid MinerConfig drawn from `seed` (epsilon 0-1 with a matching
/// min-overlap, modest season thresholds, k_max as given).
MinerConfig random_miner_config(std::uint64_t seed, int k_max);

}  // namespace stpm
