#include "stpm/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stpm {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

[[noreturn]] void csv_error(const std::string& path, std::size_t line, std::size_t col,
                            const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                           what);
}

}  // namespace

CsvData read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = split_row(line);
  if (header.empty() || header[0] != "timestamp")
    csv_error(path, 1, 1, "first column must be 'timestamp'");
  if (header.size() < 2) csv_error(path, 1, 2, "no series columns");

  CsvData data;
  data.series_ids.assign(header.begin() + 1, header.end());
  data.columns.resize(data.series_ids.size());

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_row(line);
    if (cells.size() != header.size())
      csv_error(path, line_no, cells.size() + 1,
                "expected " + std::to_string(header.size()) + " cells, got " +
                    std::to_string(cells.size()));
    for (std::size_t c = 1; c < cells.size(); ++c) {
      if (cells[c].empty()) csv_error(path, line_no, c + 1, "missing cell");
      try {
        std::size_t used = 0;
        const double v = std::stod(cells[c], &used);
        if (used != cells[c].size()) throw std::invalid_argument("trailing characters");
        data.columns[c - 1].push_back(v);
      } catch (const std::exception&) {
        csv_error(path, line_no, c + 1, "cannot parse '" + cells[c] + "' as a number");
      }
    }
  }
  return data;
}

void write_csv(const std::string& path, const CsvData& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "timestamp";
  for (const auto& id : data.series_ids) out << ',' << id;
  out << '\n';
  const std::size_t len = data.columns.empty() ? 0 : data.columns.front().size();
  for (std::size_t t = 0; t < len; ++t) {
    out << (t + 1);
    for (const auto& col : data.columns) out << ',' << col[t];
    out << '\n';
  }
}

nlohmann::ordered_json pattern_to_json(const MinedPattern& p, const SequenceDatabase& db) {
  nlohmann::ordered_json j;
  auto& events = j["events"] = nlohmann::ordered_json::array();
  for (const auto& e : p.events) events.push_back(db.event_label(e.series, e.symbol));
  auto& triples = j["triples"] = nlohmann::ordered_json::array();
  std::size_t t = 0;
  for (std::size_t right = 1; right < p.events.size(); ++right)
    for (std::size_t left = 0; left < right; ++left, ++t) {
      nlohmann::ordered_json tj;
      tj["relation"] = relation_name(p.rels[t]);
      tj["left"] = left;
      tj["right"] = right;
      triples.push_back(std::move(tj));
    }
  j["support"] = p.sup;
  j["seasons"] = p.season.seasons;
  j["distances"] = p.season.distances;
  j["max_season"] = p.season_bound.str();
  return j;
}

nlohmann::ordered_json patterns_to_json(const MiningResult& result, const SequenceDatabase& db) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : result.patterns) arr.push_back(pattern_to_json(p, db));
  return arr;
}

nlohmann::ordered_json manifest_to_json(const MiningResult& result, double wall_seconds) {
  nlohmann::ordered_json j;
  j["resolved"] = {{"max_period", result.resolved.max_period},
                   {"min_density", result.resolved.min_density},
                   {"dist_min", result.resolved.dist_min},
                   {"dist_max", result.resolved.dist_max},
                   {"min_season", result.resolved.min_season}};
  auto& levels = j["levels"] = nlohmann::ordered_json::array();
  for (const auto& s : result.levels) {
    nlohmann::ordered_json lj;
    lj["level"] = s.level;
    lj["generated_groups"] = s.generated_groups;
    lj["pruned_groups"] = s.pruned_groups;
    lj["candidate_groups"] = s.candidate_groups;
    lj["candidate_patterns"] = s.candidate_patterns;
    lj["frequent_patterns"] = s.frequent_patterns;
    lj["seconds"] = s.seconds;
    levels.push_back(std::move(lj));
  }
  j["patterns_total"] = result.patterns.size();
  j["wall_seconds"] = wall_seconds;
  j["peak_rss_kb"] = peak_rss_kb();
  return j;
}

nlohmann::ordered_json graph_to_json(const CorrelationGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices;
  auto& pairs = j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : g.pairs) {
    nlohmann::ordered_json pj;
    pj["a"] = g.vertices[p.a];
    pj["b"] = g.vertices[p.b];
    pj["nmi_ab"] = p.nmi_ab;
    pj["nmi_ba"] = p.nmi_ba;
    pj["mu"] = p.mu;
    pj["edge"] = p.admitted;
    pairs.push_back(std::move(pj));
  }
  j["log"] = g.log;
  return j;
}

long peak_rss_kb() {
  std::ifstream in("/proc/self/status");
  std::string key;
  long kb = -1;
  while (in >> key) {
    if (key == "VmHWM:") {
      in >> kb;
      break;
    }
    in.ignore(4096, '\n');
  }
  return kb;
}

MinerConfig RunConfig::miner_config() const {
  MinerConfig m;
  m.season = season;
  m.relation = relation;
  m.k_max = k_max;
  m.prune_apriori = prune_apriori;
  m.prune_transitivity = prune_transitivity;
  m.threads = threads;
  return m;
}

void RunConfig::validate() const {
  if (mode != "exact" && mode != "approx")
    throw std::invalid_argument("RunConfig: mode must be 'exact' or 'approx'");
  if (factor_m < 1) throw std::invalid_argument("RunConfig: granule factor must be >= 1");
  miner_config().validate();
}

void apply_config_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "input") cfg.input = value.get<std::string>();
    else if (key == "granule_factor") cfg.factor_m = value.get<int>();
    else if (key == "thresholds") cfg.thresholds = value.get<std::vector<double>>();
    else if (key == "max_period") cfg.season.max_period = Threshold::parse(value.is_string() ? value.get<std::string>() : value.dump());
    else if (key == "min_density") cfg.season.min_density = Threshold::parse(value.is_string() ? value.get<std::string>() : value.dump());
    else if (key == "dist_min") cfg.season.dist_min = value.get<int>();
    else if (key == "dist_max") cfg.season.dist_max = value.get<int>();
    else if (key == "min_season") cfg.season.min_season = value.get<int>();
    else if (key == "epsilon") cfg.relation.epsilon = value.get<int>();
    else if (key == "min_overlap") cfg.relation.min_overlap_d_o = value.get<int>();
    else if (key == "mode") cfg.mode = value.get<std::string>();
    else if (key == "k_max") cfg.k_max = value.get<int>();
    else if (key == "prune_apriori") cfg.prune_apriori = value.get<bool>();
    else if (key == "prune_transitivity") cfg.prune_transitivity = value.get<bool>();
    else if (key == "threads") cfg.threads = value.get<int>();
    else if (key == "output") cfg.output = value.get<std::string>();
    else if (key == "manifest") cfg.manifest = value.get<std::string>();
    else if (key == "dump_graph") cfg.dump_graph = value.get<std::string>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  RunConfig cfg;
  apply_config_json(cfg, j);
  return cfg;
}

}  // namespace stpm
