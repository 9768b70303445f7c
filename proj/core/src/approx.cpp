#include "stpm/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stpm {

int CorrelationGraph::degree(int v) const {
  int d = 0;
  for (std::size_t u = 0; u < adjacency.size(); ++u)
    if (static_cast<int>(u) != v && adjacency[v][u]) ++d;
  return d;
}

CorrelationGraph build_correlation_graph(const SymbolicDatabase& db_syb,
                                         const ResolvedSeasonConfig& season_cfg,
                                         long long n_granules, int threads) {
  const int n = static_cast<int>(db_syb.series.size());
  if (n < 2) throw std::invalid_argument("build_correlation_graph: need at least 2 series");

  const ProbTable probs = ProbTable::estimate(db_syb, threads);

  CorrelationGraph g;
  for (const auto& s : db_syb.series) g.vertices.push_back(s.series_id);
  g.adjacency.assign(n, std::vector<bool>(n, false));

  std::vector<double> h(n);
  for (int s = 0; s < n; ++s) {
    h[s] = probs.entropy_of(s);
    if (h[s] <= 0.0)
      g.log.push_back("series " + g.vertices[s] + ": zero entropy, treated as uncorrelated");
  }

  // mu for direction source -> target: lambda1 fixed by the source series,
  // minimized over the target's positive symbol marginals.
  auto directional_mu = [&](int src, int dst) {
    const double l1 = probs.min_positive_marginal(src);
    if (!(l1 > 0.0 && l1 < 1.0)) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (double l2 : probs.marginal[dst])
      if (l2 > 0.0)
        best = std::min(best, mu_threshold(l1, l2, season_cfg.min_season, season_cfg.min_density,
                                           n_granules));
    return best;
  };

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      CorrelationGraph::Pair pr;
      pr.a = a;
      pr.b = b;
      pr.nmi_ab = nmi(probs, a, b);
      pr.nmi_ba = nmi(probs, b, a);
      pr.mu = std::min(directional_mu(a, b), directional_mu(b, a));
      const std::string name = g.vertices[a] + "-" + g.vertices[b];
      if (h[a] <= 0.0 || h[b] <= 0.0) {
        pr.admitted = false;
      } else if (pr.mu <= 0.0) {
        pr.admitted = true;
        g.log.push_back("pair " + name + ": mu <= 0, bound vacuous, admitted unconditionally");
      } else if (pr.mu > 1.0) {
        pr.admitted = false;
        g.log.push_back("pair " + name + ": mu > 1, bound unattainable, pruned");
      } else {
        pr.admitted = pr.nmi_ab >= pr.mu || pr.nmi_ba >= pr.mu;
      }
      g.adjacency[a][b] = g.adjacency[b][a] = pr.admitted;
      g.pairs.push_back(pr);
    }
  return g;
}

MiningResult mine_approx(const SequenceDatabase& db, const SymbolicDatabase& db_syb,
                         const MinerConfig& cfg, CorrelationGraph* graph_out) {
  cfg.validate();
  const int n = static_cast<int>(db.series_ids.size());
  const ResolvedSeasonConfig rcfg = resolve(cfg.season, db.granule_count());
  CorrelationGraph g = build_correlation_graph(db_syb, rcfg, db.granule_count(), cfg.threads);

  SeriesFilter filter;
  filter.series_allowed.resize(n);
  filter.pair_allowed = g.adjacency;
  for (int s = 0; s < n; ++s) filter.series_allowed[s] = g.degree(s) > 0;

  if (graph_out) *graph_out = g;
  return mine_filtered(db, cfg, filter);
}

}  // namespace stpm
