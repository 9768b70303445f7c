#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "stpm/core_model.hpp"

using namespace stpm;

TEST_CASE("symbol mapping: value on a cut point maps to the upper symbol") {
  SymbolMapping m{{"low", "mid", "high"}, {1.0, 2.0}};
  m.validate();
  CHECK(m.symbol_for(0.5) == 0);
  CHECK(m.symbol_for(1.0) == 1);
  CHECK(m.symbol_for(1.5) == 1);
  CHECK(m.symbol_for(2.0) == 2);
  CHECK(m.symbol_for(9.0) == 2);
}

TEST_CASE("symbol mapping validation") {
  CHECK_THROWS(SymbolMapping{{"a"}, {}}.validate());             // alphabet too small
  CHECK_THROWS((SymbolMapping{{"a", "b"}, {1.0, 2.0}}.validate()));  // size mismatch
  CHECK_THROWS((SymbolMapping{{"a", "b", "c"}, {2.0, 1.0}}.validate()));  // not ascending
}

TEST_CASE("symbolize rejects non-finite values with the position") {
  SymbolMapping m{{"0", "1"}, {0.5}};
  std::vector<double> raw = {0.0, 1.0, std::nan("")};
  CHECK_THROWS_WITH_AS(symbolize("x", raw, m), doctest::Contains("position 3"),
                       std::invalid_argument);
}

TEST_CASE("period between granule positions") {
  CHECK(period(3, 7) == 4);
  CHECK(period(7, 3) == 4);
  CHECK(period(5, 5) == 0);
}

TEST_CASE("sequence database reconstruction: all 14 granules, exact intervals") {
  const auto db = fixtures::sequence_db();
  const auto& expected = fixtures::expected_granules();
  REQUIRE(db.granule_count() == 14);
  for (int g = 1; g <= 14; ++g) {
    CAPTURE(g);
    CHECK(fixtures::granule_instances(db, g) == fixtures::parse_expected(expected[g - 1]));
  }
}

TEST_CASE("instances within a granule follow (start asc, end desc, series asc)") {
  const auto db = fixtures::sequence_db();
  for (const auto& granule : db.granules) {
    for (std::size_t i = 1; i < granule.size(); ++i) {
      const auto& a = granule[i - 1];
      const auto& b = granule[i];
      const bool ordered = a.start < b.start ||
                           (a.start == b.start && a.end > b.end) ||
                           (a.start == b.start && a.end == b.end && a.series <= b.series);
      CHECK(ordered);
    }
  }
}

TEST_CASE("runs never cross granule boundaries; trailing partial granule dropped") {
  SymbolicDatabase db;
  db.series.push_back({"x", {1, 1, 1, 1, 1, 1, 1}});  // 7 positions, m = 3 -> N = 2
  db.mappings.push_back({{"0", "1"}, {0.5}});
  const auto seq = build_sequence_db(db, {"t", 3});
  REQUIRE(seq.granule_count() == 2);
  REQUIRE(seq.granules[0].size() == 1);
  CHECK(seq.granules[0][0] == EventInstance{0, 1, 1, 3});
  CHECK(seq.granules[1][0] == EventInstance{0, 1, 4, 6});
}

TEST_CASE("database validation catches shape errors") {
  SymbolicDatabase db;
  db.series.push_back({"a", {0, 1}});
  db.series.push_back({"a", {0, 1}});
  db.mappings.assign(2, {{"0", "1"}, {0.5}});
  CHECK_THROWS(db.validate());  // duplicate ids
  db.series[1].series_id = "b";
  db.series[1].symbols = {0};
  CHECK_THROWS(db.validate());  // length mismatch
  db.series[1].symbols = {0, 2};
  CHECK_THROWS(db.validate());  // symbol out of range
}
