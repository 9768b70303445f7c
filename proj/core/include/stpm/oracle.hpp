#pragma once

#include "stpm/miner.hpp"

namespace stpm {

/// Guard rails for the brute-force reference miner: it enumerates every
/// ordered event tuple and every relation assignment, so inputs must stay
/// small.
struct OracleLimits {
  int max_events_total = 16;
  int max_pattern_size = 3;

  void validate() const {
    if (max_events_total < 1 || max_pattern_size < 1 || max_pattern_size > 3)
      throw std::invalid_argument("OracleLimits: max_pattern_size must be in [1,3]");
  }
};

/// Brute-force miner: support computed directly from the definitions by
/// scanning every granule, no hash structures and no pruning. Output is in
/// the same canonical order as mine(), so the two results can be compared
/// byte-for-byte after serialization.
MiningResult oracle_mine(const SequenceDatabase& db, const MinerConfig& cfg,
                         const OracleLimits& limits);

}  // namespace stpm
