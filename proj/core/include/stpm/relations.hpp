#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stpm/core_model.hpp"

namespace stpm {

enum class RelationKind : int { Follows = 0, Contains = 1, Overlaps = 2 };

const char* relation_name(RelationKind r);

/// epsilon and min_overlap_d_o are in fine granule units.
/// min_overlap_d_o > 2*epsilon keeps the three predicates pairwise disjoint.
struct RelationConfig {
  int epsilon = 0;
  int min_overlap_d_o = 1;

  void validate() const {
    if (epsilon < 0) throw std::invalid_argument("RelationConfig: epsilon must be >= 0");
    if (min_overlap_d_o < 1) throw std::invalid_argument("RelationConfig: min_overlap must be >= 1");
    if (min_overlap_d_o <= 2 * epsilon)
      throw std::invalid_argument("RelationConfig: min_overlap must exceed 2*epsilon");
  }
};

/// Relation between pattern events, by index into the pattern's event list.
struct Triple {
  RelationKind relation;
  int left = 0;   // < right
  int right = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Canonical instance order: (start asc, end desc, series-id asc). classify
/// requires e_i to precede (or equal) e_j in this order.
bool instance_precedes(const EventInstance& a, const EventInstance& b,
                       const std::vector<int>& series_rank);

/// Classify an ordered instance pair. Precedence: Contains, Follows, Overlaps
/// (containment wins when e_j lies entirely within e_i's buffered end).
///   Contains: t_si <= t_sj and t_ej <= t_ei + eps
///   Follows:  t_sj >= t_ei - eps
///   Overlaps: t_si < t_sj and t_ej > t_ei + eps and t_ei - t_sj >= d_o - eps
/// Pairs matching none of the three yield nullopt.
std::optional<RelationKind> classify(const EventInstance& e_i, const EventInstance& e_j,
                                     const RelationConfig& cfg);

/// Pattern shape used by supports(): events identified as (series, symbol),
/// triples over event indices.
struct PatternShape {
  std::vector<std::pair<int, int>> events;  // (series, symbol)
  std::vector<Triple> triples;
};

struct SupportWitness {
  std::vector<EventInstance> assignment;  // one instance per pattern event
};

/// Whether an injective assignment of pattern events to instances of `seq`
/// exists such that every triple's relation holds between the assigned
/// instances, with the left instance preceding the right one canonically.
/// Sequences with fewer than two instances support nothing.
std::optional<SupportWitness> supports(const std::vector<EventInstance>& seq,
                                       const PatternShape& pattern, const RelationConfig& cfg,
                                       const std::vector<int>& series_rank);

std::vector<int> make_series_rank(const std::vector<std::string>& series_ids);

}  // namespace stpm
