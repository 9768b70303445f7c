#include "stpm/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace stpm {

namespace {

// set intersection on ascending granule lists, independent of the miner's
SupportSet intersect(const SupportSet& a, const SupportSet& b) {
  SupportSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

MiningResult oracle_mine(const SequenceDatabase& db, const MinerConfig& cfg,
                         const OracleLimits& limits) {
  cfg.validate();
  limits.validate();

  MiningResult res;
  res.resolved = resolve(cfg.season, db.granule_count());
  const auto& rcfg = res.resolved;
  const auto series_rank = make_series_rank(db.series_ids);

  std::set<EventId> event_set;
  for (const auto& granule : db.granules)
    for (const auto& inst : granule) event_set.insert({inst.series, inst.symbol});
  if (static_cast<int>(event_set.size()) > limits.max_events_total)
    throw std::invalid_argument("oracle_mine: " + std::to_string(event_set.size()) +
                                " distinct events exceed the limit of " +
                                std::to_string(limits.max_events_total));
  const std::vector<EventId> events(event_set.begin(), event_set.end());
  const int k_max = std::min(cfg.k_max, limits.max_pattern_size);

  auto emit = [&](std::vector<EventId> evs, std::vector<RelationKind> rels, SupportSet sup) {
    auto analysis = analyze(sup, rcfg);
    if (!analysis.is_frequent_seasonal) return;
    MinedPattern p;
    p.events = std::move(evs);
    p.rels = std::move(rels);
    p.season_bound = max_season(sup, rcfg.min_density);
    p.sup = std::move(sup);
    p.season = std::move(analysis);
    res.patterns.push_back(std::move(p));
  };

  // single events: support = granules where the event occurs
  for (EventId e : events) {
    SupportSet sup;
    for (int g = 0; g < db.granule_count(); ++g)
      for (const auto& inst : db.granules[g])
        if (inst.series == e.series && inst.symbol == e.symbol) {
          sup.push_back(g + 1);
          break;
        }
    emit({e}, {}, std::move(sup));
  }
  if (k_max < 2) {
    sort_canonical(res.patterns);
    return res;
  }

  // per-triple support straight from the definition: a granule supports
  // (r, a, b) iff some instance pair of (a, b), in canonical instance order,
  // realizes relation r
  std::map<std::tuple<EventId, EventId, int>, SupportSet> triple_cache;
  auto triple_sup = [&](EventId a, EventId b, RelationKind r) -> const SupportSet& {
    const auto key = std::make_tuple(a, b, static_cast<int>(r));
    auto it = triple_cache.find(key);
    if (it != triple_cache.end()) return it->second;
    SupportSet sup;
    for (int g = 0; g < db.granule_count(); ++g) {
      if (db.granules[g].size() < 2) continue;
      bool found = false;
      for (const auto& ia : db.granules[g]) {
        if (ia.series != a.series || ia.symbol != a.symbol) continue;
        for (const auto& ib : db.granules[g]) {
          if (ib.series != b.series || ib.symbol != b.symbol) continue;
          if (!instance_precedes(ia, ib, series_rank)) continue;
          if (classify(ia, ib, cfg.relation) == r) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) sup.push_back(g + 1);
    }
    return triple_cache.emplace(key, std::move(sup)).first->second;
  };

  constexpr RelationKind kRels[] = {RelationKind::Follows, RelationKind::Contains,
                                    RelationKind::Overlaps};
  const int n = static_cast<int>(events.size());

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      for (RelationKind r : kRels)
        emit({events[a], events[b]}, {r}, triple_sup(events[a], events[b], r));
    }

  if (k_max >= 3) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (b == a) continue;
        for (int c = 0; c < n; ++c) {
          if (c == a || c == b) continue;
          for (RelationKind r01 : kRels) {
            const auto& s01 = triple_sup(events[a], events[b], r01);
            if (s01.empty()) continue;
            for (RelationKind r02 : kRels) {
              const auto s012 = intersect(s01, triple_sup(events[a], events[c], r02));
              if (s012.empty()) continue;
              for (RelationKind r12 : kRels)
                emit({events[a], events[b], events[c]}, {r01, r02, r12},
                     intersect(s012, triple_sup(events[b], events[c], r12)));
            }
          }
        }
      }
  }

  sort_canonical(res.patterns);
  return res;
}

}  // namespace stpm
