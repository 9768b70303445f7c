#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "stpm/core_model.hpp"

namespace stpm {

/// Entropy of a discrete distribution, in bits. 0*log2(0) terms contribute 0.
/// Entries must be >= 0 and sum to 1 within 1e-9.
double entropy(const std::vector<double>& dist);

/// H(X|Y) in bits from a row-major joint p(x,y): -sum p(x,y)*log2(p(x,y)/p(y)),
/// with p(y) taken as the column sums. Zero-probability terms contribute 0.
double conditional_entropy(const std::vector<double>& joint, int card_x, int card_y);

double mutual_information(const std::vector<double>& joint, int card_x, int card_y);

/// Plug-in probability estimates over all fine positions of a symbolic
/// database: per-series symbol marginals and per-pair positionwise joints.
struct ProbTable {
  std::vector<std::vector<double>> marginal;  // [series][symbol]
  // (i, j) with i < j -> row-major |A_i| x |A_j| joint
  std::map<std::pair<int, int>, std::vector<double>> joint;

  static ProbTable estimate(const SymbolicDatabase& db, int threads = 1);

  int symbol_count(int series) const { return static_cast<int>(marginal[series].size()); }
  /// Joint of (x_series, y_series) in that orientation, row-major.
  std::vector<double> joint_for(int x_series, int y_series) const;

  double entropy_of(int series) const;
  /// Smallest positive symbol marginal of the series; zero-count symbols are
  /// skipped. Returns 1 for a constant series.
  double min_positive_marginal(int series) const;
};

double conditional_entropy(const ProbTable& p, int x_series, int y_series);  // H(X|Y)
double mutual_information(const ProbTable& p, int x_series, int y_series);

/// Directional normalized mutual information I(X;Y)/H(X) = 1 - H(X|Y)/H(X).
/// Defined as 0 when H(X) = 0.
double nmi(const ProbTable& p, int x_series, int y_series);

/// Principal-branch Lambert W via Halley iteration (tolerance 1e-12, capped at
/// 64 iterations). Domain x >= -1/e; below that a domain_error is thrown.
double lambert_w0(double x);

/// Lower bound on maxSeason of an event pair given a correlation level mu:
///   (lambda2 * N / min_density) * exp(W((1 - mu) * ln(lambda1) / lambda2))
/// lambda1 = minimum symbol probability of the source series, lambda2 =
/// probability of the target symbol, N = number of coarse granules.
double season_lower_bound(double lambda1, double lambda2, double mu, long long n_granules,
                          int min_density);

/// Smallest mu for which season_lower_bound can still reach min_season.
/// With rho = min_season * min_density / (lambda2 * N):
///   rho <= 1/e : mu = 1 + lambda2 / (e * ln(lambda1))
///   rho >  1/e : mu = 1 - rho * lambda2 * ln(rho) / ln(lambda1)
/// The two branches agree at rho = 1/e. The value is returned unclamped:
/// mu <= 0 means the bound is vacuous, mu > 1 means it is unattainable;
/// the caller decides how to act on either case.
double mu_threshold(double lambda1, double lambda2, int min_season, int min_density,
                    long long n_granules);

}  // namespace stpm
