#include "stpm/info.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace stpm {

namespace {

constexpr double kDistTol = 1e-9;

void check_distribution(const std::vector<double>& dist) {
  double sum = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0)) throw std::invalid_argument("entropy: negative or NaN probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kDistTol)
    throw std::invalid_argument("entropy: probabilities sum to " + std::to_string(sum));
}

}  // namespace

double entropy(const std::vector<double>& dist) {
  check_distribution(dist);
  double h = 0.0;
  for (double p : dist)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

double conditional_entropy(const std::vector<double>& joint, int card_x, int card_y) {
  check_distribution(joint);
  if (static_cast<int>(joint.size()) != card_x * card_y)
    throw std::invalid_argument("conditional_entropy: joint size mismatch");
  std::vector<double> py(card_y, 0.0);
  for (int x = 0; x < card_x; ++x)
    for (int y = 0; y < card_y; ++y) py[y] += joint[x * card_y + y];
  double h = 0.0;
  for (int x = 0; x < card_x; ++x)
    for (int y = 0; y < card_y; ++y) {
      const double pxy = joint[x * card_y + y];
      if (pxy > 0.0) h -= pxy * std::log2(pxy / py[y]);
    }
  return h;
}

double mutual_information(const std::vector<double>& joint, int card_x, int card_y) {
  std::vector<double> px(card_x, 0.0);
  for (int x = 0; x < card_x; ++x)
    for (int y = 0; y < card_y; ++y) px[x] += joint[x * card_y + y];
  return entropy(px) - conditional_entropy(joint, card_x, card_y);
}

ProbTable ProbTable::estimate(const SymbolicDatabase& db, int threads) {
  db.validate();
  const int n = static_cast<int>(db.series.size());
  const std::size_t len = db.length();
  if (len == 0) throw std::invalid_argument("ProbTable: empty database");

  ProbTable t;
  t.marginal.resize(n);
  for (int s = 0; s < n; ++s) {
    const int card = static_cast<int>(db.mappings[s].alphabet.size());
    std::vector<double> counts(card, 0.0);
    for (int sym : db.series[s].symbols) counts[sym] += 1.0;
    for (double& c : counts) c /= static_cast<double>(len);
    t.marginal[s] = std::move(counts);
  }

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<std::vector<double>> joints(pairs.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const auto [i, j] = pairs[k];
      const int ci = t.symbol_count(i), cj = t.symbol_count(j);
      std::vector<double> joint(static_cast<std::size_t>(ci) * cj, 0.0);
      for (std::size_t p = 0; p < len; ++p)
        joint[db.series[i].symbols[p] * cj + db.series[j].symbols[p]] += 1.0;
      for (double& c : joint) c /= static_cast<double>(len);
      joints[k] = std::move(joint);
    }
  };

  const int t_count = std::max(1, std::min<int>(threads, static_cast<int>(pairs.size())));
  if (t_count == 1) {
    work(0, pairs.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (pairs.size() + t_count - 1) / t_count;
    for (int w = 0; w < t_count; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(pairs.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t k = 0; k < pairs.size(); ++k) t.joint[pairs[k]] = std::move(joints[k]);
  return t;
}

std::vector<double> ProbTable::joint_for(int x_series, int y_series) const {
  if (x_series == y_series) throw std::invalid_argument("ProbTable: joint of a series with itself");
  const bool flip = x_series > y_series;
  const auto key = flip ? std::make_pair(y_series, x_series) : std::make_pair(x_series, y_series);
  const auto it = joint.find(key);
  if (it == joint.end()) throw std::out_of_range("ProbTable: pair not present");
  if (!flip) return it->second;
  const int cx = symbol_count(x_series), cy = symbol_count(y_series);
  std::vector<double> out(static_cast<std::size_t>(cx) * cy);
  for (int x = 0; x < cx; ++x)
    for (int y = 0; y < cy; ++y) out[x * cy + y] = it->second[y * cx + x];
  return out;
}

double ProbTable::entropy_of(int series) const { return entropy(marginal[series]); }

double ProbTable::min_positive_marginal(int series) const {
  double best = 1.0;
  for (double p : marginal[series])
    if (p > 0.0) best = std::min(best, p);
  return best;
}

double conditional_entropy(const ProbTable& p, int x_series, int y_series) {
  return conditional_entropy(p.joint_for(x_series, y_series), p.symbol_count(x_series),
                             p.symbol_count(y_series));
}

double mutual_information(const ProbTable& p, int x_series, int y_series) {
  return mutual_information(p.joint_for(x_series, y_series), p.symbol_count(x_series),
                            p.symbol_count(y_series));
}

double nmi(const ProbTable& p, int x_series, int y_series) {
  const double hx = p.entropy_of(x_series);
  if (hx <= 0.0) return 0.0;
  return mutual_information(p, x_series, y_series) / hx;
}

double lambert_w0(double x) {
  constexpr double kBranchPoint = -0.36787944117144233;  // -1/e
  if (x < kBranchPoint - 1e-12) throw std::domain_error("lambert_w0: argument below -1/e");
  if (x < kBranchPoint) x = kBranchPoint;
  if (x == 0.0) return 0.0;

  double w;
  if (x >= 0.0) {
    w = x / (1.0 + x);
  } else {
    // series about the branch point
    const double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
  }

  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= 1e-13) break;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0) break;
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

double season_lower_bound(double lambda1, double lambda2, double mu, long long n_granules,
                          int min_density) {
  if (!(lambda1 > 0.0 && lambda1 < 1.0))
    throw std::invalid_argument("season_lower_bound: lambda1 must be in (0,1)");
  if (!(lambda2 > 0.0 && lambda2 <= 1.0))
    throw std::invalid_argument("season_lower_bound: lambda2 must be in (0,1]");
  if (min_density < 1) throw std::invalid_argument("season_lower_bound: min_density must be >= 1");
  // log2(lambda1^(1-mu)) * ln2 / lambda2 == (1-mu) * ln(lambda1) / lambda2
  const double arg = (1.0 - mu) * std::log(lambda1) / lambda2;
  const double w = lambert_w0(arg);
  return lambda2 * static_cast<double>(n_granules) / static_cast<double>(min_density) *
         std::exp(w);
}

double mu_threshold(double lambda1, double lambda2, int min_season, int min_density,
                    long long n_granules) {
  if (!(lambda1 > 0.0 && lambda1 < 1.0))
    throw std::invalid_argument("mu_threshold: lambda1 must be in (0,1)");
  if (!(lambda2 > 0.0 && lambda2 <= 1.0))
    throw std::invalid_argument("mu_threshold: lambda2 must be in (0,1]");
  if (n_granules < 1) throw std::invalid_argument("mu_threshold: n_granules must be >= 1");
  const double rho = static_cast<double>(min_season) * static_cast<double>(min_density) /
                     (lambda2 * static_cast<double>(n_granules));
  const double ln_l1 = std::log(lambda1);
  if (rho <= 1.0 / std::exp(1.0)) return 1.0 + lambda2 / (std::exp(1.0) * ln_l1);
  return 1.0 - rho * lambda2 * std::log(rho) / ln_l1;
}

}  // namespace stpm
