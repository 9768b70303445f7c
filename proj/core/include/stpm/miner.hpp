#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "stpm/core_model.hpp"
#include "stpm/relations.hpp"
#include "stpm/seasonality.hpp"

namespace stpm {

/// A temporal event: one symbol of one series.
struct EventId {
  int series = 0;
  int symbol = 0;

  friend auto operator<=>(const EventId&, const EventId&) = default;
};

struct MinerConfig {
  SeasonConfig season;
  RelationConfig relation;
  int k_max = 2;
  bool prune_apriori = true;
  bool prune_transitivity = true;
  bool record_witnesses = true;  // per-granule realizing pairs at level 2; off for huge runs
  int threads = 1;

  void validate() const {
    season.validate();
    relation.validate();
    if (k_max < 1) throw std::invalid_argument("MinerConfig: k_max must be >= 1");
    if (threads < 1) throw std::invalid_argument("MinerConfig: threads must be >= 1");
  }
};

/// Single-event table: candidate events with their support sets (EH) and the
/// per-granule instances backing them (GH).
struct HLH1 {
  struct Entry {
    EventId event;
    SupportSet sup;
    std::vector<std::vector<EventInstance>> instances;  // parallel to sup
  };
  std::vector<Entry> entries;             // sorted by event
  std::map<EventId, int> index;

  const Entry* find(EventId e) const {
    auto it = index.find(e);
    return it == index.end() ? nullptr : &entries[it->second];
  }
};

/// Level-k table (k >= 2): candidate k-event groups (EH_k), the candidate
/// patterns mined from them (PH_k), and, at level 2, the realizing instance
/// pairs per support granule (GH_2).
struct HLHk {
  struct Group {
    std::vector<EventId> events;  // ordered tuple, built by appending one event per level
    SupportSet sup;
    std::vector<int> pattern_ids;
  };
  struct Pattern {
    std::vector<EventId> events;
    // relations grouped by right event: (0,1) | (0,2),(1,2) | (0,3),(1,3),(2,3) | ...
    std::vector<RelationKind> rels;
    SupportSet sup;
    std::vector<std::pair<EventInstance, EventInstance>> witnesses;  // level 2 only
  };

  int level = 2;
  std::vector<Group> groups;
  std::vector<Pattern> patterns;
  // level 2 lookup: (left event, right event) -> candidate (relation, pattern id)
  std::map<std::pair<EventId, EventId>, std::vector<std::pair<RelationKind, int>>> pair_index;
};

struct MinedPattern {
  std::vector<EventId> events;
  std::vector<RelationKind> rels;  // empty for single events; grouped-by-right otherwise
  SupportSet sup;
  SeasonAnalysis season;
  Rational season_bound;  // maxSeason
};

struct LevelStats {
  int level = 0;
  long long generated_groups = 0;
  long long pruned_groups = 0;
  long long candidate_groups = 0;
  long long candidate_patterns = 0;
  long long frequent_patterns = 0;
  double seconds = 0.0;
};

struct MiningResult {
  ResolvedSeasonConfig resolved;
  std::vector<MinedPattern> patterns;  // canonical order
  std::vector<LevelStats> levels;
};

/// Sorted-merge intersection of two ascending position lists.
SupportSet intersect_support(const SupportSet& a, const SupportSet& b);

/// Algorithm step 2.1: one scan of the database. Returns the HLH1 table
/// (candidate events, or all events when apriori pruning is off) and the
/// frequent seasonal single events.
std::pair<HLH1, std::vector<MinedPattern>> mine_single_events(const SequenceDatabase& db,
                                                              const MinerConfig& cfg,
                                                              const ResolvedSeasonConfig& rcfg,
                                                              LevelStats* stats = nullptr);

/// Single events admissible for extending (k-1)-groups: those present in at
/// least one candidate 2-event pattern.
std::vector<EventId> transitivity_filter(const std::vector<EventId>& f1, const HLHk& hlh2);

/// Full E-STPM run.
MiningResult mine(const SequenceDatabase& db, const MinerConfig& cfg);

/// E-STPM restricted to an admissible series set / series-pair predicate;
/// shared by the exact miner (all-true) and the approximate miner.
struct SeriesFilter {
  std::vector<bool> series_allowed;               // empty = all allowed
  std::vector<std::vector<bool>> pair_allowed;    // empty = all allowed; indexed [s1][s2]

  bool allows_series(int s) const {
    return series_allowed.empty() || series_allowed[s];
  }
  bool allows_pair(int s1, int s2) const {
    if (s1 == s2) return true;  // same-series event pairs are never graph-pruned
    return pair_allowed.empty() || pair_allowed[s1][s2];
  }
};

MiningResult mine_filtered(const SequenceDatabase& db, const MinerConfig& cfg,
                           const SeriesFilter& filter);

/// Canonical ordering / comparison helpers (shared with the oracle so both
/// sides serialize identically).
bool pattern_less(const MinedPattern& a, const MinedPattern& b);
void sort_canonical(std::vector<MinedPattern>& patterns);

}  // namespace stpm
