#include "stpm/synth.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace stpm {

std::vector<int> plant_support(const PlantSpec& plant) {
  std::vector<int> sup;
  int g = plant.first_granule;
  for (int s = 0; s < plant.season_count; ++s) {
    if (s > 0) g = sup.back() + plant.inter_distance;
    for (int d = 0; d < plant.season_density; ++d) {
      if (d > 0) g += plant.intra_period;
      sup.push_back(g);
    }
  }
  return sup;
}

void GenSpec::validate() const {
  if (n_series < 1 || n_granules < 1 || factor_m < 1)
    throw std::invalid_argument("GenSpec: sizes must be >= 1");
  for (const auto& plant : plants) {
    if (plant.events.empty()) throw std::invalid_argument("GenSpec: plant with no events");
    std::set<int> used;
    for (const auto& ev : plant.events) {
      if (ev.series < 0 || ev.series >= n_series)
        throw std::invalid_argument("GenSpec: plant series out of range");
      if (!used.insert(ev.series).second)
        throw std::invalid_argument("GenSpec: plant reuses a series");
      if (ev.start_offset < 1 || ev.end_offset < ev.start_offset || ev.end_offset > factor_m)
        throw std::invalid_argument("GenSpec: plant offsets outside the granule");
    }
    if (plant.first_granule < 1 || plant.season_count < 1 || plant.season_density < 1 ||
        plant.intra_period < 1 || plant.inter_distance < 1)
      throw std::invalid_argument("GenSpec: plant geometry values must be >= 1");
    if (!(plant.noise_rate >= 0.0 && plant.noise_rate < 0.5))
      throw std::invalid_argument("GenSpec: noise_rate must be in [0, 0.5)");
    if (plant_support(plant).back() > n_granules)
      throw std::invalid_argument("GenSpec: plant does not fit in " +
                                  std::to_string(n_granules) + " granules");
  }
}

PlantedPattern planted_pattern(const GenSpec& spec, const PlantSpec& plant,
                               const RelationConfig& rcfg) {
  spec.validate();
  std::vector<EventInstance> insts;
  for (const auto& ev : plant.events)
    insts.push_back({ev.series, 1, ev.start_offset, ev.end_offset});
  // generated series ids sort like their indices, so rank == series index
  std::sort(insts.begin(), insts.end(), [](const EventInstance& a, const EventInstance& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.end != b.end) return a.end > b.end;
    return a.series < b.series;
  });

  PlantedPattern out;
  for (const auto& inst : insts) out.events.push_back({inst.series, inst.symbol});
  for (std::size_t j = 1; j < insts.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const auto rel = classify(insts[i], insts[j], rcfg);
      if (!rel)
        throw std::invalid_argument("planted_pattern: event pair realizes no relation");
      out.rels.push_back(*rel);
    }
  return out;
}

SymbolicDatabase generate(const GenSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::size_t len =
      static_cast<std::size_t>(spec.n_granules) * static_cast<std::size_t>(spec.factor_m);

  int width = 2;
  for (int v = 100; v <= spec.n_series; v *= 10) ++width;

  SymbolicDatabase db;
  for (int s = 0; s < spec.n_series; ++s) {
    std::string id(width, '0');
    for (int v = s, i = width - 1; v > 0; v /= 10, --i) id[i] = static_cast<char>('0' + v % 10);
    db.series.push_back({"s" + id, std::vector<int>(len, 0)});
    db.mappings.push_back({{"0", "1"}, {0.5}});
  }

  double noise = 0.0;
  for (const auto& plant : spec.plants) {
    noise = std::max(noise, plant.noise_rate);
    for (int g : plant_support(plant)) {
      const std::size_t base = static_cast<std::size_t>(g - 1) * spec.factor_m;
      for (const auto& ev : plant.events)
        for (int p = ev.start_offset; p <= ev.end_offset; ++p)
          db.series[ev.series].symbols[base + p - 1] = 1;
    }
  }

  if (noise > 0.0) {
    std::mt19937_64 rng(seed);
    for (auto& series : db.series)
      for (int& sym : series.symbols) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < noise) sym = 1 - sym;
      }
  }
  return db;
}

std::vector<std::vector<double>> to_raw(const SymbolicDatabase& db) {
  std::vector<std::vector<double>> out;
  for (const auto& series : db.series) {
    std::vector<double> col;
    col.reserve(series.symbols.size());
    for (int sym : series.symbols) col.push_back(static_cast<double>(sym));
    out.push_back(std::move(col));
  }
  return out;
}

RandomDb random_database(const RandomDbSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const int n_series = pick(spec.min_series, spec.max_series);
  const int n_granules = pick(spec.min_granules, spec.max_granules);
  const int m = pick(spec.min_factor, spec.max_factor);
  const std::size_t len = static_cast<std::size_t>(n_granules) * m;

  SymbolicDatabase db;
  for (int s = 0; s < n_series; ++s) {
    const double fill = 0.2 + 0.6 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    std::vector<int> symbols(len);
    for (auto& sym : symbols)
      sym = (static_cast<double>(rng() >> 11) * 0x1.0p-53) < fill ? 1 : 0;
    db.series.push_back({"s" + std::to_string(s), std::move(symbols)});
    db.mappings.push_back({{"0", "1"}, {0.5}});
  }
  return {std::move(db), m};
}

MinerConfig random_miner_config(std::uint64_t seed, int k_max) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  MinerConfig cfg;
  cfg.k_max = k_max;
  cfg.relation.epsilon = pick(0, 1);
  cfg.relation.min_overlap_d_o = 2 * cfg.relation.epsilon + pick(1, 2);
  cfg.season.max_period = {static_cast<double>(pick(1, 3)), false};
  cfg.season.min_density = {static_cast<double>(pick(1, 3)), false};
  cfg.season.dist_min = pick(1, 3);
  cfg.season.dist_max = cfg.season.dist_min + pick(0, 8);
  cfg.season.min_season = pick(1, 3);
  return cfg;
}

}  // namespace stpm
