#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "netcolor/graph.hpp"
#include "netcolor/rng.hpp"

namespace netcolor {

// Assignment of one of q colors (0-based) to every node.
struct Coloring {
  std::vector<int> colors;
  int q = 1;

  bool operator==(const Coloring&) const = default;
};

// Per-node weights w_v = k_v^beta entering the local conflict index.
// Isolated nodes store weight 0 when beta < 0; they never appear in anyone's
// neighbor list, so the stored value is inert.
struct WeightScheme {
  double beta = 0.0;
  std::vector<double> weights;

  static WeightScheme from_graph(const Graph& g, double beta);

  // beta == 0 means every weight is exactly 1 and comparisons can be done in
  // integers.
  bool unit() const { return beta == 0.0; }
};

enum class TerminatedBy { Proper, Patience, MaxSweeps };
const char* to_string(TerminatedBy t);

struct DdcConfig {
  int q = 1;
  double beta = 0.0;
  std::uint64_t seed = 0;
  int max_sweeps = 1000;
  int patience_sweeps = 50;  // stop after this many sweeps without a new f_d minimum
  bool record_trajectory = false;
};

struct DdcResult {
  Coloring final_coloring;
  int sweeps_run = 0;
  std::uint64_t updates_applied = 0;
  std::vector<std::pair<int, double>> trajectory;  // (sweep index, f_d); filled iff recorded
  TerminatedBy terminated_by = TerminatedBy::Proper;

  bool operator==(const DdcResult&) const = default;
};

// I.i.d. uniform colors; deterministic given the seed. Throws for q < 1.
Coloring random_coloring(std::size_t n, int q, std::uint64_t seed);

// True iff some neighbor of u shares u's color.
bool has_defect(const Graph& g, const Coloring& col, NodeId u);

// Local conflict index of u evaluated as if u wore color c:
// sum over neighbors v of w_v * [c == C(v)]. Throws for c outside [0, q).
double candidate_lci(const Graph& g, const Coloring& col, const WeightScheme& w, NodeId u, int c);

// candidate_lci at u's current color. With beta == 0 this is exactly the
// number of defective edges at u.
double lci(const Graph& g, const Coloring& col, const WeightScheme& w, NodeId u);

// The argmin set over candidate colors, ascending; never empty. With
// beta == 0 the comparison is exact integer counting; otherwise two values
// tie iff |a - b| <= 1e-9 * max(1, |a|, |b|).
std::vector<int> best_colors(const Graph& g, const Coloring& col, const WeightScheme& w, NodeId u);

// One asynchronous update. A node with no defective edge keeps its color;
// otherwise it takes a uniformly random element of best_colors(). Returns
// true iff the stored color changed.
bool ddc_step(const Graph& g, Coloring& col, const WeightScheme& w, NodeId u, Rng& rng);

std::size_t count_defective_edges(const Graph& g, const Coloring& col);

// Full dynamic decentralized coloring run: uniform random initial coloring,
// then sweeps of node_count single-node updates with targets drawn uniformly
// with replacement. Stops when no defective edge remains, when the defective
// fraction has not reached a new minimum for patience_sweeps consecutive
// sweeps, or at max_sweeps. Deterministic given cfg.seed; the initial
// coloring equals random_coloring(n, q, cfg.seed).
DdcResult run_ddc(const Graph& g, const DdcConfig& cfg);

}  // namespace netcolor
