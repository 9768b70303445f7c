#include "stpm/seasonality.hpp"

#include <cmath>
#include <numeric>

namespace stpm {

int Threshold::resolve(int n_granules) const {
  double v = value;
  if (is_percent) v = std::ceil(value / 100.0 * n_granules);
  const int out = static_cast<int>(v);
  if (out < 1) throw std::invalid_argument("Threshold: resolved value must be >= 1");
  return out;
}

Threshold Threshold::parse(const std::string& text) {
  Threshold t;
  std::string s = text;
  if (!s.empty() && s.back() == '%') {
    t.is_percent = true;
    s.pop_back();
  }
  std::size_t used = 0;
  t.value = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("Threshold: cannot parse '" + text + "'");
  return t;
}

ResolvedSeasonConfig resolve(const SeasonConfig& cfg, int n_granules) {
  cfg.validate();
  ResolvedSeasonConfig r;
  r.max_period = cfg.max_period.resolve(n_granules);
  r.min_density = cfg.min_density.resolve(n_granules);
  r.dist_min = cfg.dist_min;
  r.dist_max = cfg.dist_max;
  r.min_season = cfg.min_season;
  return r;
}

std::string Rational::str() const {
  if (num == 0) return "0";
  const long long g = std::gcd(num, den);
  const long long n = num / g, d = den / g;
  if (d == 1) return std::to_string(n);
  return std::to_string(n) + "/" + std::to_string(d);
}

Rational max_season(const SupportSet& sup, int min_density) {
  if (min_density < 1) throw std::invalid_argument("max_season: min_density must be >= 1");
  return {static_cast<long long>(sup.size()), min_density};
}

bool is_candidate(std::size_t sup_size, int min_season, int min_density) {
  return static_cast<long long>(sup_size) >=
         static_cast<long long>(min_season) * static_cast<long long>(min_density);
}

bool is_candidate(const SupportSet& sup, int min_season, int min_density) {
  return is_candidate(sup.size(), min_season, min_density);
}

std::vector<SupportSet> near_support_sets(const SupportSet& sup, int max_period) {
  if (max_period < 1) throw std::invalid_argument("near_support_sets: max_period must be >= 1");
  std::vector<SupportSet> out;
  for (int pos : sup) {
    if (out.empty() || pos - out.back().back() > max_period)
      out.emplace_back();
    out.back().push_back(pos);
  }
  return out;
}

SeasonAnalysis analyze(const SupportSet& sup, const ResolvedSeasonConfig& cfg) {
  SeasonAnalysis a;
  a.near_sets = near_support_sets(sup, cfg.max_period);

  SupportSet run;
  auto close_run = [&] {
    if (run.empty()) return;
    if (static_cast<int>(run.size()) >= cfg.min_density) {
      if (!a.seasons.empty()) a.distances.push_back(run.front() - a.seasons.back().back());
      a.seasons.push_back(run);
    }
    run.clear();
  };

  for (int pos : sup) {
    if (!run.empty() && pos - run.back() <= cfg.max_period) {
      run.push_back(pos);
      continue;
    }
    close_run();
    if (a.seasons.empty()) {
      run.push_back(pos);  // first season has no distance-from-origin constraint
    } else {
      const int d = pos - a.seasons.back().back();
      if (d >= cfg.dist_min && d <= cfg.dist_max) run.push_back(pos);
      // otherwise the granule is outside the distance window and is skipped
    }
  }
  close_run();

  a.season_count = static_cast<int>(a.seasons.size());
  bool dist_ok = true;
  for (int d : a.distances)
    if (d < cfg.dist_min || d > cfg.dist_max) dist_ok = false;
  a.is_frequent_seasonal = a.season_count >= cfg.min_season && dist_ok;
  return a;
}

}  // namespace stpm
