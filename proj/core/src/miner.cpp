#include "stpm/miner.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace stpm {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Run fn(begin, end, slot) over [0, n) split into `threads` contiguous chunks.
// Results land in per-chunk slots so the merge order is deterministic.
template <typename Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    fn(std::size_t{0}, n, 0);
    return;
  }
  const int t = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + t - 1) / t;
  for (int i = 0; i < t; ++i) {
    const std::size_t b = i * chunk;
    const std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&, b, e, i] { fn(b, e, i); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

SupportSet intersect_support(const SupportSet& a, const SupportSet& b) {
  SupportSet out;
  out.reserve(std::min(a.size(), b.size()));
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { out.push_back(a[i]); ++i; ++j; }
  }
  return out;
}

std::pair<HLH1, std::vector<MinedPattern>> mine_single_events(const SequenceDatabase& db,
                                                              const MinerConfig& cfg,
                                                              const ResolvedSeasonConfig& rcfg,
                                                              LevelStats* stats) {
  const auto t0 = std::chrono::steady_clock::now();
  if (db.granules.empty()) throw std::invalid_argument("mine_single_events: empty database");

  // one scan of the database
  std::map<EventId, HLH1::Entry> table;
  for (int g = 0; g < db.granule_count(); ++g) {
    for (const auto& inst : db.granules[g]) {
      auto& entry = table[{inst.series, inst.symbol}];
      if (entry.sup.empty() || entry.sup.back() != g + 1) {
        entry.sup.push_back(g + 1);
        entry.instances.emplace_back();
      }
      entry.instances.back().push_back(inst);
    }
  }

  HLH1 hlh1;
  std::vector<MinedPattern> frequent;
  long long generated = 0, pruned = 0;
  for (auto& [event, entry] : table) {
    ++generated;
    entry.event = event;
    const bool candidate = is_candidate(entry.sup, rcfg.min_season, rcfg.min_density);
    if (!candidate && cfg.prune_apriori) {
      ++pruned;
      continue;
    }
    hlh1.index[event] = static_cast<int>(hlh1.entries.size());
    hlh1.entries.push_back(std::move(entry));
  }
  for (const auto& entry : hlh1.entries) {
    auto analysis = analyze(entry.sup, rcfg);
    if (!analysis.is_frequent_seasonal) continue;
    MinedPattern p;
    p.events = {entry.event};
    p.sup = entry.sup;
    p.season = std::move(analysis);
    p.season_bound = max_season(entry.sup, rcfg.min_density);
    frequent.push_back(std::move(p));
  }
  if (stats) {
    stats->level = 1;
    stats->generated_groups = generated;
    stats->pruned_groups = pruned;
    stats->candidate_groups = static_cast<long long>(hlh1.entries.size());
    stats->candidate_patterns = static_cast<long long>(hlh1.entries.size());
    stats->frequent_patterns = static_cast<long long>(frequent.size());
    stats->seconds = seconds_since(t0);
  }
  return {std::move(hlh1), std::move(frequent)};
}

std::vector<EventId> transitivity_filter(const std::vector<EventId>& f1, const HLHk& hlh2) {
  std::vector<EventId> out;
  for (EventId e : f1) {
    bool present = false;
    for (const auto& [pair, rels] : hlh2.pair_index) {
      if (!rels.empty() && (pair.first == e || pair.second == e)) {
        present = true;
        break;
      }
    }
    if (present) out.push_back(e);
  }
  return out;
}

namespace {

struct Level2Out {
  std::vector<HLHk::Group> groups;
  std::vector<HLHk::Pattern> patterns;
  long long generated = 0, pruned = 0;
};

// Mine candidate 2-event groups and patterns for the ordered event pairs
// (a, b), a != b, drawn from HLH1 indices in [begin, end) x all.
void mine_level2_range(const SequenceDatabase& db, const HLH1& hlh1, const MinerConfig& cfg,
                       const ResolvedSeasonConfig& rcfg, const SeriesFilter& filter,
                       const std::vector<int>& series_rank, std::size_t begin, std::size_t end,
                       Level2Out& out) {
  for (std::size_t ai = begin; ai < end; ++ai) {
    const auto& ea = hlh1.entries[ai];
    for (std::size_t bi = 0; bi < hlh1.entries.size(); ++bi) {
      if (ai == bi) continue;
      const auto& eb = hlh1.entries[bi];
      if (ea.event.series == eb.event.series && ea.event.symbol == eb.event.symbol) continue;
      if (!filter.allows_pair(ea.event.series, eb.event.series)) continue;
      ++out.generated;
      SupportSet sup = intersect_support(ea.sup, eb.sup);
      if (cfg.prune_apriori && !is_candidate(sup, rcfg.min_season, rcfg.min_density)) {
        ++out.pruned;
        continue;
      }

      HLHk::Group group;
      group.events = {ea.event, eb.event};
      group.sup = std::move(sup);

      // verify relations granule by granule; one count per granule per pattern key
      HLHk::Pattern pats[3];
      std::size_t ia = 0, ib = 0;
      for (int granule : group.sup) {
        while (ea.sup[ia] != granule) ++ia;
        while (eb.sup[ib] != granule) ++ib;
        for (const auto& inst_a : ea.instances[ia]) {
          for (const auto& inst_b : eb.instances[ib]) {
            if (!instance_precedes(inst_a, inst_b, series_rank)) continue;
            auto rel = classify(inst_a, inst_b, cfg.relation);
            if (!rel) continue;
            auto& pat = pats[static_cast<int>(*rel)];
            if (!pat.sup.empty() && pat.sup.back() == granule) continue;
            pat.sup.push_back(granule);
            if (cfg.record_witnesses) pat.witnesses.emplace_back(inst_a, inst_b);
          }
        }
      }
      for (int r = 0; r < 3; ++r) {
        auto& pat = pats[r];
        if (pat.sup.empty()) continue;
        if (cfg.prune_apriori && !is_candidate(pat.sup, rcfg.min_season, rcfg.min_density))
          continue;
        pat.events = group.events;
        pat.rels = {static_cast<RelationKind>(r)};
        group.pattern_ids.push_back(static_cast<int>(out.patterns.size()));
        out.patterns.push_back(std::move(pat));
      }
      out.groups.push_back(std::move(group));
    }
  }
}

struct LevelKOut {
  std::vector<HLHk::Group> groups;
  std::vector<HLHk::Pattern> patterns;
  long long generated = 0, pruned = 0;
};

void mine_levelk_range(const HLHk& prev, const HLH1& hlh1, const HLHk& hlh2,
                       const std::vector<EventId>& filtered_f1, const MinerConfig& cfg,
                       const ResolvedSeasonConfig& rcfg, std::size_t begin, std::size_t end,
                       LevelKOut& out) {
  for (std::size_t gi = begin; gi < end; ++gi) {
    const auto& prev_group = prev.groups[gi];
    if (prev_group.pattern_ids.empty()) continue;
    for (EventId ek : filtered_f1) {
      if (std::find(prev_group.events.begin(), prev_group.events.end(), ek) !=
          prev_group.events.end())
        continue;
      const auto* ek_entry = hlh1.find(ek);
      if (!ek_entry) continue;
      ++out.generated;
      SupportSet gsup = intersect_support(prev_group.sup, ek_entry->sup);
      if (cfg.prune_apriori && !is_candidate(gsup, rcfg.min_season, rcfg.min_density)) {
        ++out.pruned;
        continue;
      }

      // candidate relations (r, E_i, E_k) from HLH2, checked from i = k-2 down
      // to 0; a pair with no candidate relation kills the whole extension
      const int prev_k = static_cast<int>(prev_group.events.size());
      std::vector<const std::vector<std::pair<RelationKind, int>>*> options(prev_k);
      bool viable = true;
      for (int i = prev_k - 1; i >= 0; --i) {
        auto it = hlh2.pair_index.find({prev_group.events[i], ek});
        if (it == hlh2.pair_index.end() || it->second.empty()) {
          viable = false;
          break;
        }
        options[i] = &it->second;
      }

      HLHk::Group group;
      group.events = prev_group.events;
      group.events.push_back(ek);
      group.sup = std::move(gsup);

      if (viable) {
        for (int pid : prev_group.pattern_ids) {
          const auto& prev_pat = prev.patterns[pid];
          // depth-first over relation choices, intersecting supports as we go
          std::vector<RelationKind> chosen(prev_k, RelationKind::Follows);
          auto dfs = [&](auto&& self, int i, const SupportSet& sup) -> void {
            if (sup.empty()) return;
            if (i < 0) {
              if (cfg.prune_apriori && !is_candidate(sup, rcfg.min_season, rcfg.min_density))
                return;
              HLHk::Pattern pat;
              pat.events = group.events;
              pat.rels = prev_pat.rels;
              for (int j = 0; j < prev_k; ++j) pat.rels.push_back(chosen[j]);
              pat.sup = sup;
              group.pattern_ids.push_back(static_cast<int>(out.patterns.size()));
              out.patterns.push_back(std::move(pat));
              return;
            }
            for (const auto& [rel, pat2_id] : *options[i]) {
              chosen[i] = rel;
              self(self, i - 1, intersect_support(sup, hlh2.patterns[pat2_id].sup));
            }
          };
          dfs(dfs, prev_k - 1, prev_pat.sup);
        }
      }
      out.groups.push_back(std::move(group));
    }
  }
}

void collect_frequent(const HLHk& level, const ResolvedSeasonConfig& rcfg,
                      std::vector<MinedPattern>& out, LevelStats& stats) {
  for (const auto& pat : level.patterns) {
    auto analysis = analyze(pat.sup, rcfg);
    if (!analysis.is_frequent_seasonal) continue;
    MinedPattern mp;
    mp.events = pat.events;
    mp.rels = pat.rels;
    mp.sup = pat.sup;
    mp.season = std::move(analysis);
    mp.season_bound = max_season(pat.sup, rcfg.min_density);
    out.push_back(std::move(mp));
    ++stats.frequent_patterns;
  }
}

}  // namespace

bool pattern_less(const MinedPattern& a, const MinedPattern& b) {
  if (a.events.size() != b.events.size()) return a.events.size() < b.events.size();
  if (a.events != b.events) return a.events < b.events;
  return a.rels < b.rels;
}

void sort_canonical(std::vector<MinedPattern>& patterns) {
  std::sort(patterns.begin(), patterns.end(), pattern_less);
}

MiningResult mine_filtered(const SequenceDatabase& db, const MinerConfig& cfg,
                           const SeriesFilter& filter) {
  cfg.validate();
  MiningResult result;
  result.resolved = resolve(cfg.season, db.granule_count());
  const auto& rcfg = result.resolved;
  const auto series_rank = make_series_rank(db.series_ids);

  // Step 2.1: single events
  LevelStats s1;
  auto [hlh1_full, singles] = mine_single_events(db, cfg, rcfg, &s1);
  HLH1 hlh1;
  if (filter.series_allowed.empty()) {
    hlh1 = std::move(hlh1_full);
  } else {
    for (auto& entry : hlh1_full.entries) {
      if (!filter.allows_series(entry.event.series)) continue;
      hlh1.index[entry.event] = static_cast<int>(hlh1.entries.size());
      hlh1.entries.push_back(std::move(entry));
    }
    std::erase_if(singles, [&](const MinedPattern& p) {
      return !filter.allows_series(p.events.front().series);
    });
    s1.frequent_patterns = static_cast<long long>(singles.size());
  }
  result.patterns = std::move(singles);
  result.levels.push_back(s1);
  if (cfg.k_max == 1) {
    sort_canonical(result.patterns);
    return result;
  }

  // Step 2.2, level 2
  auto t0 = std::chrono::steady_clock::now();
  HLHk hlh2;
  LevelStats s2;
  s2.level = 2;
  {
    std::vector<Level2Out> slots(std::max(1, cfg.threads));
    parallel_chunks(hlh1.entries.size(), cfg.threads, [&](std::size_t b, std::size_t e, int slot) {
      mine_level2_range(db, hlh1, cfg, rcfg, filter, series_rank, b, e, slots[slot]);
    });
    for (auto& slot : slots) {
      const int pat_base = static_cast<int>(hlh2.patterns.size());
      for (auto& g : slot.groups) {
        for (int& pid : g.pattern_ids) pid += pat_base;
        hlh2.groups.push_back(std::move(g));
      }
      for (auto& p : slot.patterns) hlh2.patterns.push_back(std::move(p));
      s2.generated_groups += slot.generated;
      s2.pruned_groups += slot.pruned;
    }
  }
  s2.candidate_groups = static_cast<long long>(hlh2.groups.size());
  s2.candidate_patterns = static_cast<long long>(hlh2.patterns.size());
  for (int pid = 0; pid < static_cast<int>(hlh2.patterns.size()); ++pid) {
    const auto& pat = hlh2.patterns[pid];
    hlh2.pair_index[{pat.events[0], pat.events[1]}].emplace_back(pat.rels[0], pid);
  }
  collect_frequent(hlh2, rcfg, result.patterns, s2);
  s2.seconds = seconds_since(t0);
  result.levels.push_back(s2);

  // levels 3..k_max
  std::vector<EventId> f1;
  for (const auto& entry : hlh1.entries) f1.push_back(entry.event);
  HLHk hlh2_keep = std::move(hlh2);  // pair lookups at deeper levels
  HLHk prev;
  if (cfg.k_max >= 3) prev = hlh2_keep;

  for (int k = 3; k <= cfg.k_max; ++k) {
    t0 = std::chrono::steady_clock::now();
    std::vector<EventId> filtered_f1 =
        cfg.prune_transitivity ? transitivity_filter(f1, hlh2_keep) : f1;

    HLHk level;
    level.level = k;
    LevelStats sk;
    sk.level = k;
    {
      std::vector<LevelKOut> slots(std::max(1, cfg.threads));
      parallel_chunks(prev.groups.size(), cfg.threads, [&](std::size_t b, std::size_t e, int slot) {
        mine_levelk_range(prev, hlh1, hlh2_keep, filtered_f1, cfg, rcfg, b, e, slots[slot]);
      });
      for (auto& slot : slots) {
        const int pat_base = static_cast<int>(level.patterns.size());
        for (auto& g : slot.groups) {
          for (int& pid : g.pattern_ids) pid += pat_base;
          level.groups.push_back(std::move(g));
        }
        for (auto& p : slot.patterns) level.patterns.push_back(std::move(p));
        sk.generated_groups += slot.generated;
        sk.pruned_groups += slot.pruned;
      }
    }
    sk.candidate_groups = static_cast<long long>(level.groups.size());
    sk.candidate_patterns = static_cast<long long>(level.patterns.size());
    collect_frequent(level, rcfg, result.patterns, sk);
    sk.seconds = seconds_since(t0);
    result.levels.push_back(sk);
    if (level.patterns.empty()) break;
    prev = std::move(level);
  }

  sort_canonical(result.patterns);
  return result;
}

MiningResult mine(const SequenceDatabase& db, const MinerConfig& cfg) {
  return mine_filtered(db, cfg, SeriesFilter{});
}

}  // namespace stpm
