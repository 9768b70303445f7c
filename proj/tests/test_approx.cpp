#include <doctest.h>

#include <set>
#include <string>

#include "fixtures.hpp"
#include "stpm/approx.hpp"
#include "stpm/io.hpp"
#include "stpm/synth.hpp"

using namespace stpm;

namespace {

std::set<std::string> pattern_keys(const MiningResult& r, const SequenceDatabase& db) {
  std::set<std::string> out;
  for (const auto& p : r.patterns) out.insert(pattern_to_json(p, db).dump());
  return out;
}

}  // namespace

TEST_CASE("correlation graph on the fixture is symmetric and undirected") {
  const auto syb = fixtures::symbolic_db();
  const auto db = fixtures::sequence_db();
  const auto rcfg = resolve(fixtures::reference_config().season, db.granule_count());
  const auto g = build_correlation_graph(syb, rcfg, db.granule_count());
  REQUIRE(g.vertices.size() == 6);
  for (std::size_t a = 0; a < g.vertices.size(); ++a)
    for (std::size_t b = 0; b < g.vertices.size(); ++b)
      CHECK(g.adjacency[a][b] == g.adjacency[b][a]);
  // C-D: both directional NMI values sit near 0.4; the pair must carry an
  // edge whenever its resolved mu is at most NMI(D;C)
  const int C = fixtures::sx('C'), D = fixtures::sx('D');
  for (const auto& pr : g.pairs)
    if (pr.a == std::min(C, D) && pr.b == std::max(C, D)) {
      if (pr.mu <= 0.40) CHECK(pr.admitted);
      CHECK(pr.nmi_ab == doctest::Approx(0.41).epsilon(0.03));
      CHECK(pr.nmi_ba == doctest::Approx(0.40).epsilon(0.03));
    }
}

TEST_CASE("constant series get no edges") {
  SymbolicDatabase db;
  db.series.push_back({"a", {0, 0, 0, 0, 1, 1, 0, 0}});
  db.series.push_back({"b", std::vector<int>(8, 1)});  // constant
  db.mappings.assign(2, {{"0", "1"}, {0.5}});
  const auto g = build_correlation_graph(db, {1, 1, 1, 1, 1}, 4);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK_FALSE(g.log.empty());
}

TEST_CASE("approximate output is a subset of the exact output") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto rd = random_database({}, seed);
    if (rd.db.series.size() < 2) continue;
    const auto db = build_sequence_db(rd.db, {"t", rd.factor_m});
    const auto cfg = random_miner_config(seed, 3);
    const auto exact = mine(db, cfg);
    const auto approx = mine_approx(db, rd.db, cfg);
    const auto exact_keys = pattern_keys(exact, db);
    for (const auto& key : pattern_keys(approx, db)) {
      CAPTURE(seed);
      CHECK(exact_keys.count(key) == 1);
    }
  }
}

TEST_CASE("fully connected graph leaves the output identical to the exact miner") {
  const auto syb = fixtures::symbolic_db();
  const auto db = fixtures::sequence_db();
  const auto cfg = fixtures::reference_config();
  CorrelationGraph g;
  const auto approx = mine_approx(db, syb, cfg, &g);
  bool all_connected = true;
  for (const auto& pr : g.pairs)
    if (!pr.admitted) all_connected = false;
  if (all_connected) {
    const auto exact = mine(db, cfg);
    CHECK(pattern_keys(approx, db) == pattern_keys(exact, db));
  } else {
    CHECK(true);  // fixture graph not fully connected under this config
  }
}

TEST_CASE("zero-noise plants with graph edges are fully recalled") {
  GenSpec spec;
  spec.n_series = 6;
  spec.n_granules = 40;
  spec.factor_m = 4;
  for (int p = 0; p < 3; ++p) {
    // identical offsets on paired series: maximal correlation, Contains pattern
    PlantSpec plant;
    plant.events = {{2 * p, 1, 3}, {2 * p + 1, 1, 3}};
    plant.first_granule = 1 + p;
    plant.season_count = 3;
    plant.season_density = 3;
    plant.intra_period = 1;
    plant.inter_distance = 6;
    spec.plants.push_back(plant);
  }
  const auto syb = generate(spec, 99);
  const auto db = build_sequence_db(syb, {"t", spec.factor_m});

  MinerConfig cfg;
  cfg.season.max_period = {2, false};
  cfg.season.min_density = {3, false};
  cfg.season.dist_min = 2;
  cfg.season.dist_max = 10;
  cfg.season.min_season = 2;
  cfg.k_max = 2;

  CorrelationGraph g;
  const auto approx = mine_approx(db, syb, cfg, &g);
  const auto exact = mine(db, cfg);

  for (const auto& plant : spec.plants) {
    REQUIRE(g.has_edge(plant.events[0].series, plant.events[1].series));
    const auto planted = planted_pattern(spec, plant, cfg.relation);
    bool in_approx = false;
    for (const auto& p : approx.patterns)
      if (p.events == planted.events && p.rels == planted.rels) in_approx = true;
    CHECK(in_approx);
  }
  const auto exact_keys = pattern_keys(exact, db);
  for (const auto& key : pattern_keys(approx, db)) CHECK(exact_keys.count(key) == 1);
}
