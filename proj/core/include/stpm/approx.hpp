#pragma once

#include <string>
#include <vector>

#include "stpm/info.hpp"
#include "stpm/miner.hpp"

namespace stpm {

/// Undirected series correlation graph: every unordered pair carries its two
/// directional NMI weights and the resolved correlation threshold; `admitted`
/// marks the pairs that become edges.
struct CorrelationGraph {
  struct Pair {
    int a = 0;
    int b = 0;           // a < b
    double nmi_ab = 0;   // NMI(a;b)
    double nmi_ba = 0;   // NMI(b;a)
    double mu = 0;       // min mu_threshold over both directions and target symbols
    bool admitted = false;
  };

  std::vector<std::string> vertices;  // series ids
  std::vector<Pair> pairs;            // all unordered pairs, lexicographic
  std::vector<std::vector<bool>> adjacency;
  std::vector<std::string> log;       // vacuous/unattainable mu and degenerate-entropy notes

  bool has_edge(int a, int b) const { return a != b && adjacency[a][b]; }
  int degree(int v) const;
};

/// Algorithm step: estimate probabilities, compute directional NMI for every
/// series pair, resolve the pair threshold mu (minimum of mu_threshold over
/// both directions and all target symbols, with lambda1 = the source series'
/// smallest positive symbol marginal and lambda2 = the target symbol's
/// marginal), and admit an edge iff either directional NMI reaches mu.
/// A series with zero entropy is uncorrelated with everything and gets no
/// edges. mu <= 0 admits the pair unconditionally; mu > 1 prunes it. Both
/// cases are recorded in `log`.
CorrelationGraph build_correlation_graph(const SymbolicDatabase& db_syb,
                                         const ResolvedSeasonConfig& season_cfg,
                                         long long n_granules, int threads = 1);

/// Approximate mining: build the correlation graph, then run the exact miner
/// restricted to it — single events only from edge-incident series, 2-event
/// groups only for edge-connected series pairs (same-series pairs are always
/// kept), deeper levels unchanged. Output is always a subset of mine().
MiningResult mine_approx(const SequenceDatabase& db, const SymbolicDatabase& db_syb,
                         const MinerConfig& cfg, CorrelationGraph* graph_out = nullptr);

}  // namespace stpm
