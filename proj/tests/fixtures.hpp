#pragma once

// Shared fixture: the six-series binary database used across the unit and
// acceptance tests, plus the reference mining configuration.

#include <set>
#include <string>
#include <vector>

#include "stpm/core_model.hpp"
#include "stpm/miner.hpp"

namespace fixtures {

// 42 fine granules per series; coarse factor 3 gives 14 coarse granules.
inline const std::vector<std::pair<std::string, std::vector<int>>>& six_series() {
  static const std::vector<std::pair<std::string, std::vector<int>>> rows = {
      {"C", {1,1,0,1,0,0,1,1,0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,1,0,0,0,0,0,0,1,0,0,1,1,0,0,0,0,1,1,0}},
      {"D", {1,0,0,1,0,0,1,1,0,1,1,0,0,0,0,0,0,0,1,1,1,1,1,1,0,0,0,0,0,0,1,0,0,1,0,0,1,1,0,1,1,0}},
      {"F", {0,0,1,0,1,1,0,0,1,0,0,1,1,1,1,0,0,0,0,0,0,0,0,0,1,1,1,1,1,1,0,0,1,0,0,1,0,0,1,0,0,1}},
      {"K", {0,0,1,0,1,1,0,0,1,1,1,1,1,1,1,1,1,1,0,0,0,0,0,0,1,1,1,1,1,1,0,0,1,0,0,1,0,1,1,0,0,1}},
      {"M", {1,1,0,1,0,0,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,1,1,1,1,1,1,1,1,1,1,1,1,0,1,0,1,1,1,1,1,1}},
      {"N", {1,1,0,1,1,1,1,1,1,1,1,0,1,1,1,1,1,1,0,0,0,0,0,0,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,0,0,0}},
  };
  return rows;
}

inline stpm::SymbolicDatabase symbolic_db() {
  stpm::SymbolicDatabase db;
  for (const auto& [id, symbols] : six_series()) {
    db.series.push_back({id, symbols});
    db.mappings.push_back({{"0", "1"}, {0.5}});
  }
  db.validate();
  return db;
}

inline stpm::SequenceDatabase sequence_db() {
  return stpm::build_sequence_db(symbolic_db(), {"t", 3});
}

// maxPeriod 2, minDensity 3, distInterval [4,10], minSeason 2, epsilon 0, d_o 1
inline stpm::MinerConfig reference_config(int k_max = 2) {
  stpm::MinerConfig cfg;
  cfg.season.max_period = {2, false};
  cfg.season.min_density = {3, false};
  cfg.season.dist_min = 4;
  cfg.season.dist_max = 10;
  cfg.season.min_season = 2;
  cfg.k_max = k_max;
  return cfg;
}

// the full 14-granule sequence database obtained from the fixture with m = 3,
// instances written as label[start,end], space separated
inline const std::vector<std::string>& expected_granules() {
  static const std::vector<std::string> rows = {
      "C:1[1,2] C:0[3,3] D:1[1,1] D:0[2,3] F:0[1,2] F:1[3,3] K:0[1,2] K:1[3,3] M:1[1,2] M:0[3,3] "
      "N:1[1,2] N:0[3,3]",
      "C:1[4,4] C:0[5,6] D:1[4,4] D:0[5,6] F:0[4,4] F:1[5,6] K:0[4,4] K:1[5,6] M:1[4,4] M:0[5,6] "
      "N:1[4,6]",
      "C:1[7,8] C:0[9,9] D:1[7,8] D:0[9,9] F:0[7,8] F:1[9,9] K:0[7,8] K:1[9,9] M:1[7,9] N:1[7,9]",
      "C:0[10,12] D:1[10,11] D:0[12,12] F:0[10,11] F:1[12,12] K:1[10,12] M:1[10,11] M:0[12,12] "
      "N:1[10,11] N:0[12,12]",
      "C:0[13,15] D:0[13,15] F:1[13,15] K:1[13,15] M:1[13,15] N:1[13,15]",
      "C:0[16,18] D:0[16,18] F:0[16,18] K:1[16,18] M:1[16,18] N:1[16,18]",
      "C:1[19,21] D:1[19,21] F:0[19,21] K:0[19,21] M:0[19,21] N:0[19,21]",
      "C:1[22,24] D:1[22,24] F:0[22,24] K:0[22,24] M:1[22,24] N:0[22,24]",
      "C:0[25,27] D:0[25,27] F:1[25,27] K:1[25,27] M:1[25,27] N:1[25,27]",
      "C:0[28,30] D:0[28,30] F:1[28,30] K:1[28,30] M:1[28,30] N:1[28,30]",
      "C:1[31,31] C:0[32,33] D:1[31,31] D:0[32,33] F:0[31,32] F:1[33,33] K:0[31,32] K:1[33,33] "
      "M:1[31,33] N:1[31,33]",
      "C:1[34,35] C:0[36,36] D:1[34,34] D:0[35,36] F:0[34,35] F:1[36,36] K:0[34,35] K:1[36,36] "
      "M:0[34,34] M:1[35,35] M:0[36,36] N:1[34,36]",
      "C:0[37,39] D:1[37,38] D:0[39,39] F:0[37,38] F:1[39,39] K:0[37,37] K:1[38,39] M:1[37,39] "
      "N:1[37,39]",
      "C:1[40,41] C:0[42,42] D:1[40,41] D:0[42,42] F:0[40,41] F:1[42,42] K:0[40,41] K:1[42,42] "
      "M:1[40,42] N:0[40,42]",
  };
  return rows;
}

inline std::multiset<std::string> granule_instances(const stpm::SequenceDatabase& db, int pos) {
  std::multiset<std::string> out;
  for (const auto& inst : db.granules[pos - 1])
    out.insert(db.event_label(inst.series, inst.symbol) + "[" + std::to_string(inst.start) + "," +
               std::to_string(inst.end) + "]");
  return out;
}

inline std::multiset<std::string> parse_expected(const std::string& text) {
  std::multiset<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(' ', start);
    if (end == std::string::npos) end = text.size();
    if (end > start) out.insert(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// series index by id in the fixture order
inline int sx(char id) {
  switch (id) {
    case 'C': return 0;
    case 'D': return 1;
    case 'F': return 2;
    case 'K': return 3;
    case 'M': return 4;
    case 'N': return 5;
  }
  return -1;
}

}  // namespace fixtures
