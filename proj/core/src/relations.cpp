#include "stpm/relations.hpp"

#include <algorithm>
#include <numeric>

namespace stpm {

const char* relation_name(RelationKind r) {
  switch (r) {
    case RelationKind::Follows: return "Follows";
    case RelationKind::Contains: return "Contains";
    case RelationKind::Overlaps: return "Overlaps";
  }
  return "?";
}

bool instance_precedes(const EventInstance& a, const EventInstance& b,
                       const std::vector<int>& series_rank) {
  if (a.start != b.start) return a.start < b.start;
  if (a.end != b.end) return a.end > b.end;
  return series_rank[a.series] <= series_rank[b.series];
}

std::optional<RelationKind> classify(const EventInstance& e_i, const EventInstance& e_j,
                                     const RelationConfig& cfg) {
  if (e_j.start < e_i.start)
    throw std::invalid_argument("classify: pair not in canonical order");
  const int eps = cfg.epsilon;
  // Contains first: when e_j sits entirely inside e_i's buffered end (e.g. two
  // identical instants), the containment reading wins over the relaxed Follows.
  if (e_i.start <= e_j.start && e_j.end <= e_i.end + eps) return RelationKind::Contains;
  if (e_j.start >= e_i.end - eps) return RelationKind::Follows;
  if (e_i.start < e_j.start && e_j.end > e_i.end + eps &&
      e_i.end - e_j.start >= cfg.min_overlap_d_o - eps)
    return RelationKind::Overlaps;
  return std::nullopt;
}

namespace {

bool extend(const std::vector<EventInstance>& seq, const PatternShape& pattern,
            const RelationConfig& cfg, const std::vector<int>& series_rank,
            std::vector<int>& chosen, std::size_t next) {
  if (next == pattern.events.size()) return true;
  const auto [series, symbol] = pattern.events[next];
  for (std::size_t c = 0; c < seq.size(); ++c) {
    const auto& inst = seq[c];
    if (inst.series != series || inst.symbol != symbol) continue;
    if (std::find(chosen.begin(), chosen.end(), static_cast<int>(c)) != chosen.end()) continue;
    bool ok = true;
    for (const auto& t : pattern.triples) {
      const std::size_t l = static_cast<std::size_t>(t.left);
      const std::size_t r = static_cast<std::size_t>(t.right);
      if (l != next && r != next) continue;
      const std::size_t other = (l == next) ? r : l;
      if (other >= next) continue;  // partner not assigned yet
      const auto& li = (l == next) ? inst : seq[chosen[l]];
      const auto& ri = (r == next) ? inst : seq[chosen[r]];
      if (!instance_precedes(li, ri, series_rank) || classify(li, ri, cfg) != t.relation) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(static_cast<int>(c));
    if (extend(seq, pattern, cfg, series_rank, chosen, next + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<SupportWitness> supports(const std::vector<EventInstance>& seq,
                                       const PatternShape& pattern, const RelationConfig& cfg,
                                       const std::vector<int>& series_rank) {
  if (seq.size() < 2) return std::nullopt;
  std::vector<int> chosen;
  chosen.reserve(pattern.events.size());
  if (!extend(seq, pattern, cfg, series_rank, chosen, 0)) return std::nullopt;
  SupportWitness w;
  for (int c : chosen) w.assignment.push_back(seq[c]);
  return w;
}

std::vector<int> make_series_rank(const std::vector<std::string>& series_ids) {
  std::vector<int> order(series_ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return series_ids[a] < series_ids[b]; });
  std::vector<int> rank(series_ids.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  return rank;
}

}  // namespace stpm
