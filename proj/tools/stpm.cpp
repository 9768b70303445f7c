// stpm: seasonal temporal pattern mining CLI.
// Subcommands: mine, gen, oracle-diff, bench, graph.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "stpm/approx.hpp"
#include "stpm/io.hpp"
#include "stpm/miner.hpp"
#include "stpm/oracle.hpp"
#include "stpm/synth.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

stpm::SymbolicDatabase symbolic_from_csv(const stpm::CsvData& data,
                                         const std::vector<double>& thresholds) {
  stpm::SymbolMapping mapping;
  for (std::size_t i = 0; i <= thresholds.size(); ++i)
    mapping.alphabet.push_back(std::to_string(i));
  mapping.thresholds = thresholds;
  mapping.validate();

  stpm::SymbolicDatabase db;
  for (std::size_t c = 0; c < data.series_ids.size(); ++c) {
    db.series.push_back(stpm::symbolize(data.series_ids[c], data.columns[c], mapping));
    db.mappings.push_back(mapping);
  }
  db.validate();
  return db;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared mine/bench/graph flags; values are applied over the config file only
// when the flag was actually passed.
struct CommonFlags {
  std::string input, max_period, min_density, thresholds_csv;
  int factor = 1, epsilon = 0, min_overlap = 1;
  int dist_min = 1, dist_max = 1, min_season = 1, k_max = 2, threads = 1;
  bool no_apriori = false, no_transitivity = false;

  void add(CLI::App& app) {
    app.add_option("-i,--input", input, "input CSV (first column 'timestamp')");
    app.add_option("-m,--granule-factor", factor, "fine granules per coarse granule");
    app.add_option("--thresholds", thresholds_csv, "comma-separated symbol cut points");
    app.add_option("--epsilon", epsilon, "relation tolerance, fine granules");
    app.add_option("--min-overlap", min_overlap, "minimal Overlaps duration d_o");
    app.add_option("--max-period", max_period, "season gap bound, count or 'K%'");
    app.add_option("--min-density", min_density, "season density bound, count or 'K%'");
    app.add_option("--dist-min", dist_min, "minimal distance between seasons");
    app.add_option("--dist-max", dist_max, "maximal distance between seasons");
    app.add_option("--min-season", min_season, "minimal number of seasons");
    app.add_option("--k-max", k_max, "maximal pattern size");
    app.add_option("--threads", threads, "parallel fan-out width");
    app.add_flag("--no-prune-apriori", no_apriori, "disable the candidate gate");
    app.add_flag("--no-prune-transitivity", no_transitivity, "disable the event filter");
  }

  void apply(const CLI::App& app, stpm::RunConfig& cfg) const {
    if (app.count("--input")) cfg.input = input;
    if (app.count("--granule-factor")) cfg.factor_m = factor;
    if (app.count("--thresholds")) {
      cfg.thresholds.clear();
      std::stringstream ss(thresholds_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.thresholds.push_back(std::stod(tok));
    }
    if (app.count("--epsilon")) cfg.relation.epsilon = epsilon;
    if (app.count("--min-overlap")) cfg.relation.min_overlap_d_o = min_overlap;
    if (app.count("--max-period")) cfg.season.max_period = stpm::Threshold::parse(max_period);
    if (app.count("--min-density")) cfg.season.min_density = stpm::Threshold::parse(min_density);
    if (app.count("--dist-min")) cfg.season.dist_min = dist_min;
    if (app.count("--dist-max")) cfg.season.dist_max = dist_max;
    if (app.count("--min-season")) cfg.season.min_season = min_season;
    if (app.count("--k-max")) cfg.k_max = k_max;
    if (app.count("--threads")) cfg.threads = threads;
    if (no_apriori) cfg.prune_apriori = false;
    if (no_transitivity) cfg.prune_transitivity = false;
  }
};

stpm::GenSpec load_gen_spec(const std::string& plants_path, int n_series, int n_granules,
                            int factor) {
  stpm::GenSpec spec;
  spec.n_series = n_series;
  spec.n_granules = n_granules;
  spec.factor_m = factor;
  std::ifstream in(plants_path);
  if (!in) throw std::runtime_error("cannot open " + plants_path);
  json j;
  in >> j;
  for (const auto& pj : j) {
    stpm::PlantSpec plant;
    for (const auto& ej : pj.at("events"))
      plant.events.push_back({ej.at("series").get<int>(), ej.at("start").get<int>(),
                              ej.at("end").get<int>()});
    plant.first_granule = pj.value("first_granule", 1);
    plant.season_count = pj.at("season_count").get<int>();
    plant.season_density = pj.at("density").get<int>();
    plant.intra_period = pj.value("intra_period", 1);
    plant.inter_distance = pj.value("inter_distance", 1);
    plant.noise_rate = pj.value("noise_rate", 0.0);
    spec.plants.push_back(std::move(plant));
  }
  spec.validate();
  return spec;
}

int cmd_mine(const CLI::App& app, const CommonFlags& flags, const std::string& config_path,
             const std::string& mode, const std::string& output, const std::string& manifest,
             const std::string& dump_graph) {
  stpm::RunConfig cfg;
  if (!config_path.empty()) cfg = stpm::load_run_config(config_path);
  flags.apply(app, cfg);
  if (app.count("--mode")) cfg.mode = mode;
  if (app.count("-o")) cfg.output = output;
  if (app.count("--manifest")) cfg.manifest = manifest;
  if (app.count("--dump-graph")) cfg.dump_graph = dump_graph;
  cfg.validate();
  if (cfg.input.empty()) throw std::runtime_error("mine: no input file");

  const auto data = stpm::read_csv(cfg.input);
  const auto syb = symbolic_from_csv(data, cfg.thresholds);
  const auto db = stpm::build_sequence_db(syb, {"t", cfg.factor_m});

  const auto t0 = std::chrono::steady_clock::now();
  stpm::MiningResult result;
  stpm::CorrelationGraph graph;
  bool have_graph = false;
  if (cfg.mode == "approx") {
    result = stpm::mine_approx(db, syb, cfg.miner_config(), &graph);
    have_graph = true;
  } else {
    result = stpm::mine(db, cfg.miner_config());
  }
  const double wall = seconds_since(t0);

  write_text(cfg.output, stpm::patterns_to_json(result, db).dump(2) + "\n");
  if (!cfg.manifest.empty())
    write_text(cfg.manifest, stpm::manifest_to_json(result, wall).dump(2) + "\n");
  if (!cfg.dump_graph.empty()) {
    if (!have_graph)
      graph = stpm::build_correlation_graph(syb, result.resolved, db.granule_count(),
                                            cfg.threads);
    write_text(cfg.dump_graph, stpm::graph_to_json(graph).dump(2) + "\n");
  }
  std::cerr << "mined " << result.patterns.size() << " patterns in " << wall << " s\n";
  return 0;
}

int cmd_oracle_diff(int seeds, int k_max) {
  stpm::OracleLimits limits;
  int failures = 0;
  for (int seed = 1; seed <= seeds; ++seed) {
    const auto rd = stpm::random_database({}, static_cast<std::uint64_t>(seed));
    const auto db = stpm::build_sequence_db(rd.db, {"t", rd.factor_m});
    const auto cfg = stpm::random_miner_config(static_cast<std::uint64_t>(seed), k_max);
    const auto exact = stpm::mine(db, cfg);
    const auto oracle = stpm::oracle_mine(db, cfg, limits);
    const std::string a = stpm::patterns_to_json(exact, db).dump();
    const std::string b = stpm::patterns_to_json(oracle, db).dump();
    if (a != b) {
      ++failures;
      std::cerr << "seed " << seed << ": MISMATCH (exact " << exact.patterns.size()
                << " patterns, oracle " << oracle.patterns.size() << ")\n";
    }
  }
  std::cout << (seeds - failures) << "/" << seeds << " seeds agree\n";
  return failures == 0 ? 0 : 1;
}

int cmd_bench(const CLI::App& app, const CommonFlags& flags, const std::string& modes_csv,
              int repeat, int n_series, int n_granules, std::uint64_t seed) {
  stpm::RunConfig cfg;
  flags.apply(app, cfg);

  stpm::SymbolicDatabase syb;
  if (!cfg.input.empty()) {
    syb = symbolic_from_csv(stpm::read_csv(cfg.input), cfg.thresholds);
  } else {
    // synthetic load: a handful of planted pairs plus light noise
    stpm::GenSpec spec;
    spec.n_series = n_series;
    spec.n_granules = n_granules;
    spec.factor_m = std::max(cfg.factor_m, 4);
    cfg.factor_m = spec.factor_m;
    for (int p = 0; p < std::min(n_series / 2, 8); ++p) {
      stpm::PlantSpec plant;
      plant.events = {{2 * p, 1, 2}, {2 * p + 1, 2, 4}};
      plant.first_granule = 1 + p;
      plant.season_count = 3;
      plant.season_density = cfg.season.min_density.is_percent
                                 ? 3
                                 : static_cast<int>(cfg.season.min_density.value);
      plant.intra_period = 1;
      plant.inter_distance = 5;
      plant.noise_rate = 0.02;
      spec.plants.push_back(std::move(plant));
    }
    syb = stpm::generate(spec, seed);
  }
  const auto db = stpm::build_sequence_db(syb, {"t", cfg.factor_m});

  std::vector<std::string> modes;
  std::stringstream ss(modes_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) modes.push_back(tok);

  std::map<std::string, std::string> pattern_dump;
  std::map<std::string, double> best;
  for (const auto& mode : modes) {
    if (mode != "exact" && mode != "approx") throw std::runtime_error("bench: bad mode " + mode);
    stpm::MiningResult result;
    double best_s = 0;
    for (int r = 0; r < repeat; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      result = mode == "approx" ? stpm::mine_approx(db, syb, cfg.miner_config())
                                : stpm::mine(db, cfg.miner_config());
      const double s = seconds_since(t0);
      if (r == 0 || s < best_s) best_s = s;
    }
    best[mode] = best_s;
    pattern_dump[mode] = stpm::patterns_to_json(result, db).dump();
    std::cout << mode << ": best " << best_s << " s over " << repeat << " runs, "
              << result.patterns.size() << " patterns, peak RSS " << stpm::peak_rss_kb()
              << " kB\n";
  }

  if (pattern_dump.count("exact") && pattern_dump.count("approx")) {
    const auto exact = json::parse(pattern_dump["exact"]);
    const auto approx = json::parse(pattern_dump["approx"]);
    std::set<std::string> exact_keys;
    for (const auto& p : exact) exact_keys.insert(p.dump());
    std::size_t hit = 0;
    for (const auto& p : approx)
      if (exact_keys.count(p.dump())) ++hit;
    const double accuracy =
        exact.empty() ? 1.0 : static_cast<double>(hit) / static_cast<double>(exact.size());
    std::cout << "accuracy (|approx ∩ exact| / |exact|): " << accuracy << "\n";
    std::cout << "speedup exact/approx: " << best["exact"] / best["approx"] << "x\n";
  }
  return 0;
}

int cmd_graph(const CLI::App& app, const CommonFlags& flags, const std::string& output) {
  stpm::RunConfig cfg;
  flags.apply(app, cfg);
  if (cfg.input.empty()) throw std::runtime_error("graph: no input file");
  const auto syb = symbolic_from_csv(stpm::read_csv(cfg.input), cfg.thresholds);
  const auto db = stpm::build_sequence_db(syb, {"t", cfg.factor_m});
  const auto rcfg = stpm::resolve(cfg.season, db.granule_count());
  const auto graph = stpm::build_correlation_graph(syb, rcfg, db.granule_count(), cfg.threads);
  write_text(output, stpm::graph_to_json(graph).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seasonal temporal pattern miner"};
  app.require_subcommand(1);

  // mine
  auto* mine = app.add_subcommand("mine", "mine frequent seasonal temporal patterns");
  CommonFlags mine_flags;
  mine_flags.add(*mine);
  std::string config_path, mode = "exact", output, manifest, dump_graph;
  mine->add_option("--config", config_path, "JSON config file; flags override its values");
  mine->add_option("--mode", mode, "exact | approx");
  mine->add_option("-o,--output", output, "patterns JSON path (default stdout)");
  mine->add_option("--manifest", manifest, "run manifest JSON path");
  mine->add_option("--dump-graph", dump_graph, "correlation graph JSON path");

  // gen
  auto* gen = app.add_subcommand("gen", "generate synthetic data with planted patterns");
  int gen_series = 2, gen_granules = 10, gen_factor = 4;
  std::uint64_t gen_seed = 1;
  std::string plants_path, gen_out;
  gen->add_option("--series", gen_series, "number of series")->required();
  gen->add_option("--granules", gen_granules, "number of coarse granules")->required();
  gen->add_option("-m,--granule-factor", gen_factor, "fine granules per coarse granule");
  gen->add_option("--plants", plants_path, "path to a JSON plant list")->required();
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "output CSV path")->required();

  // oracle-diff
  auto* diff = app.add_subcommand("oracle-diff", "differential test vs the brute-force miner");
  int diff_seeds = 200, diff_kmax = 3;
  diff->add_option("--seeds", diff_seeds, "number of random databases");
  diff->add_option("--k-max", diff_kmax, "maximal pattern size (<= 3)");

  // bench
  auto* bench = app.add_subcommand("bench", "compare exact and approximate runtime/accuracy");
  CommonFlags bench_flags;
  bench_flags.add(*bench);
  std::string bench_modes = "exact,approx";
  int bench_repeat = 3, bench_series = 20, bench_granules = 500;
  std::uint64_t bench_seed = 1;
  bench->add_option("--modes", bench_modes, "comma-separated subset of exact,approx");
  bench->add_option("--repeat", bench_repeat, "runs per mode, best time reported");
  bench->add_option("--series", bench_series, "synthetic series count (no --input)");
  bench->add_option("--granules", bench_granules, "synthetic granule count (no --input)");
  bench->add_option("--seed", bench_seed, "synthetic RNG seed");

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "emit the series correlation graph");
  CommonFlags graph_flags;
  graph_flags.add(*graph_cmd);
  std::string graph_out;
  graph_cmd->add_option("-o,--output", graph_out, "graph JSON path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mine->parsed())
      return cmd_mine(*mine, mine_flags, config_path, mode, output, manifest, dump_graph);
    if (gen->parsed()) {
      const auto spec = load_gen_spec(plants_path, gen_series, gen_granules, gen_factor);
      const auto syb = stpm::generate(spec, gen_seed);
      stpm::CsvData data;
      for (const auto& s : syb.series) data.series_ids.push_back(s.series_id);
      data.columns = stpm::to_raw(syb);
      stpm::write_csv(gen_out, data);
      std::cerr << "wrote " << gen_out << "\n";
      return 0;
    }
    if (diff->parsed()) return cmd_oracle_diff(diff_seeds, diff_kmax);
    if (bench->parsed())
      return cmd_bench(*bench, bench_flags, bench_modes, bench_repeat, bench_series,
                       bench_granules, bench_seed);
    if (graph_cmd->parsed()) return cmd_graph(*graph_cmd, graph_flags, graph_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
