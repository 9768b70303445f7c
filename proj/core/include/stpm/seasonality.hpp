#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stpm {

/// Ascending coarse granule positions.
using SupportSet = std::vector<int>;

/// A threshold that is either absolute or a percentage of the sequence
/// database size, resolved once N is known.
struct Threshold {
  double value = 1;
  bool is_percent = false;

  int resolve(int n_granules) const;
  static Threshold parse(const std::string& text);  // "3" or "7.5%"
};

struct SeasonConfig {
  Threshold max_period{1, false};
  Threshold min_density{1, false};
  int dist_min = 1;
  int dist_max = 1;
  int min_season = 1;

  void validate() const {
    if (dist_min > dist_max) throw std::invalid_argument("SeasonConfig: dist_min > dist_max");
    if (dist_min < 1) throw std::invalid_argument("SeasonConfig: dist_min must be >= 1");
    if (min_season < 1) throw std::invalid_argument("SeasonConfig: min_season must be >= 1");
  }
};

/// SeasonConfig with percentage thresholds resolved against N.
struct ResolvedSeasonConfig {
  int max_period = 1;
  int min_density = 1;
  int dist_min = 1;
  int dist_max = 1;
  int min_season = 1;
};

ResolvedSeasonConfig resolve(const SeasonConfig& cfg, int n_granules);

/// maxSeason as an exact rational |SUP| / minDensity.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;  // reduced, "8/3" or "2"
};

struct SeasonAnalysis {
  std::vector<SupportSet> near_sets;  // maximal near support sets (pure partition)
  std::vector<SupportSet> seasons;    // the set PS
  std::vector<int> distances;         // |seasons| - 1 consecutive distances
  bool is_frequent_seasonal = false;
  int season_count = 0;
};

Rational max_season(const SupportSet& sup, int min_density);

/// Candidate gate in exact integer form: |SUP| >= minSeason * minDensity.
bool is_candidate(const SupportSet& sup, int min_season, int min_density);
bool is_candidate(std::size_t sup_size, int min_season, int min_density);

/// Partition into maximal runs whose consecutive gaps are <= max_period.
std::vector<SupportSet> near_support_sets(const SupportSet& sup, int max_period);

/// Season extraction and the frequent-seasonal verdict.
///
/// Seasons are built in one left-to-right scan: a run grows while consecutive
/// gaps are <= maxPeriod; when it breaks, the run is kept as a season iff its
/// density is >= minDensity. After the first season, a new run may only start
/// at a granule whose distance from the previous season's last granule lies in
/// distInterval; granules outside that window are skipped. The pattern is
/// frequent seasonal iff at least minSeason seasons survive and every
/// consecutive-season distance is inside distInterval.
SeasonAnalysis analyze(const SupportSet& sup, const ResolvedSeasonConfig& cfg);

}  // namespace stpm
