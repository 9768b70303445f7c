#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stpm {

/// Relationship between the fine granularity G and the coarse granularity H:
/// every H granule is the union of factor_m adjacent G granules.
struct GranularitySpec {
  std::string fine_unit_label = "granule";
  int factor_m = 1;

  void validate() const {
    if (factor_m < 1) throw std::invalid_argument("GranularitySpec: factor_m must be >= 1");
  }
};

/// Maps raw values to a finite symbol alphabet via ascending cut points.
/// A value equal to a cut point maps to the upper symbol.
struct SymbolMapping {
  std::vector<std::string> alphabet;   // size >= 2
  std::vector<double> thresholds;      // strictly ascending, size = |alphabet| - 1

  void validate() const;
  int symbol_for(double value) const;
};

/// One symbolized series: a symbol index per fine granule, positions 1-based.
struct SymbolicSeries {
  std::string series_id;
  std::vector<int> symbols;
};

struct SymbolicDatabase {
  std::vector<SymbolicSeries> series;
  std::vector<SymbolMapping> mappings;  // parallel to series

  std::size_t length() const { return series.empty() ? 0 : series.front().symbols.size(); }
  void validate() const;
};

/// A maximal run of one symbol within a coarse granule. Positions are fine
/// granule positions, 1-based, inclusive.
struct EventInstance {
  int series = 0;   // index into SymbolicDatabase::series
  int symbol = 0;
  int start = 0;
  int end = 0;

  friend bool operator==(const EventInstance&, const EventInstance&) = default;
};

/// Per coarse granule: instances sorted by (start asc, end desc, series id asc).
/// The end-descending tie-break puts the longer instance first when two share a
/// start, so the pair is ordered the way the Contains relation expects.
struct SequenceDatabase {
  std::vector<std::vector<EventInstance>> granules;  // granule p is granules[p-1]
  std::vector<std::string> series_ids;
  std::vector<std::vector<std::string>> symbol_names;  // per series
  int factor_m = 1;

  int granule_count() const { return static_cast<int>(granules.size()); }
  const std::string& event_name(int series, int symbol) const;
  std::string event_label(int series, int symbol) const;  // "C:1"
};

/// Period between two granule positions of the same granularity.
int period(int pos_i, int pos_j);

/// Symbolize a raw series. Non-finite values are rejected with the offending
/// 1-based position in the message.
SymbolicSeries symbolize(const std::string& series_id, const std::vector<double>& raw,
                         const SymbolMapping& mapping);

/// Build the temporal sequence database: N = floor(L / m) coarse granules,
/// each holding the maximal same-symbol runs of every series. Runs never cross
/// granule boundaries; a trailing partial granule is dropped.
SequenceDatabase build_sequence_db(const SymbolicDatabase& db, const GranularitySpec& spec);

}  // namespace stpm
