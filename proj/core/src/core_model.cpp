#include "stpm/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

namespace stpm {

void SymbolMapping::validate() const {
  if (alphabet.size() < 2) throw std::invalid_argument("SymbolMapping: alphabet must have >= 2 symbols");
  if (thresholds.size() != alphabet.size() - 1)
    throw std::invalid_argument("SymbolMapping: need |alphabet|-1 thresholds");
  for (std::size_t i = 1; i < thresholds.size(); ++i)
    if (!(thresholds[i - 1] < thresholds[i]))
      throw std::invalid_argument("SymbolMapping: thresholds must be strictly ascending");
}

int SymbolMapping::symbol_for(double value) const {
  // value == cut point maps to the upper symbol
  auto it = std::upper_bound(thresholds.begin(), thresholds.end(), value,
                             [](double v, double t) { return v < t; });
  return static_cast<int>(it - thresholds.begin());
}

void SymbolicDatabase::validate() const {
  if (series.size() != mappings.size())
    throw std::invalid_argument("SymbolicDatabase: one mapping per series required");
  std::set<std::string> ids;
  for (std::size_t s = 0; s < series.size(); ++s) {
    if (!ids.insert(series[s].series_id).second)
      throw std::invalid_argument("SymbolicDatabase: duplicate series id " + series[s].series_id);
    if (series[s].symbols.size() != length())
      throw std::invalid_argument("SymbolicDatabase: series " + series[s].series_id +
                                  " has mismatched length");
    const int n = static_cast<int>(mappings[s].alphabet.size());
    for (int sym : series[s].symbols)
      if (sym < 0 || sym >= n)
        throw std::invalid_argument("SymbolicDatabase: symbol out of alphabet range in " +
                                    series[s].series_id);
  }
}

const std::string& SequenceDatabase::event_name(int series, int symbol) const {
  return symbol_names[series][symbol];
}

std::string SequenceDatabase::event_label(int series, int symbol) const {
  return series_ids[series] + ":" + symbol_names[series][symbol];
}

int period(int pos_i, int pos_j) {
  if (pos_i < 1 || pos_j < 1) throw std::invalid_argument("period: positions must be >= 1");
  return std::abs(pos_i - pos_j);
}

SymbolicSeries symbolize(const std::string& series_id, const std::vector<double>& raw,
                         const SymbolMapping& mapping) {
  mapping.validate();
  SymbolicSeries out;
  out.series_id = series_id;
  out.symbols.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i]))
      throw std::invalid_argument("symbolize: non-finite value in series " + series_id +
                                  " at position " + std::to_string(i + 1));
    out.symbols.push_back(mapping.symbol_for(raw[i]));
  }
  return out;
}

SequenceDatabase build_sequence_db(const SymbolicDatabase& db, const GranularitySpec& spec) {
  if (spec.factor_m < 1) throw std::invalid_argument("build_sequence_db: factor_m must be >= 1");
  db.validate();
  const int m = spec.factor_m;
  const int L = static_cast<int>(db.length());
  if (L < m) throw std::invalid_argument("build_sequence_db: series shorter than one coarse granule");
  const int n_granules = L / m;
  const int n_series = static_cast<int>(db.series.size());

  SequenceDatabase seq;
  seq.factor_m = m;
  seq.granules.resize(n_granules);
  seq.series_ids.reserve(n_series);
  seq.symbol_names.reserve(n_series);
  for (int s = 0; s < n_series; ++s) {
    seq.series_ids.push_back(db.series[s].series_id);
    seq.symbol_names.push_back(db.mappings[s].alphabet);
  }

  // rank series by id for the ordering tie-break
  std::vector<int> rank(n_series);
  {
    std::vector<int> order(n_series);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return seq.series_ids[a] < seq.series_ids[b]; });
    for (int i = 0; i < n_series; ++i) rank[order[i]] = i;
  }

  for (int g = 0; g < n_granules; ++g) {
    const int lo = g * m + 1;  // 1-based fine positions of this granule
    const int hi = lo + m - 1;
    auto& instances = seq.granules[g];
    for (int s = 0; s < n_series; ++s) {
      const auto& syms = db.series[s].symbols;
      int run_start = lo;
      for (int p = lo + 1; p <= hi + 1; ++p) {
        if (p > hi || syms[p - 1] != syms[run_start - 1]) {
          instances.push_back({s, syms[run_start - 1], run_start, p - 1});
          run_start = p;
        }
      }
    }
    std::sort(instances.begin(), instances.end(), [&](const EventInstance& a, const EventInstance& b) {
      if (a.start != b.start) return a.start < b.start;
      if (a.end != b.end) return a.end > b.end;
      return rank[a.series] < rank[b.series];
    });
  }
  return seq;
}

}  // namespace stpm
