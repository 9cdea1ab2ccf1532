#include "netcolor/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace netcolor {

namespace {

constexpr double kTieRelTol = 1e-9;

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= kTieRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

void check_color(const Coloring& col, int c) {
  if (c < 0 || c >= col.q) {
    throw std::invalid_argument("color " + std::to_string(c) + " out of range for q=" +
                                std::to_string(col.q));
  }
}

// Scratch space reused across the inner loop of a run; avoids per-step
// allocations.
struct StepScratch {
  std::vector<std::int64_t> counts;
  std::vector<double> sums;
  std::vector<int> best;
};

void best_colors_into(const Graph& g, const Coloring& col, const WeightScheme& w, NodeId u,
                      StepScratch& scratch) {
  const int q = col.q;
  scratch.best.clear();
  if (w.unit()) {
    scratch.counts.assign(static_cast<std::size_t>(q), 0);
    for (NodeId v : g.neighbors(u)) ++scratch.counts[static_cast<std::size_t>(col.colors[v])];
    const std::int64_t lowest = *std::min_element(scratch.counts.begin(), scratch.counts.end());
    for (int c = 0; c < q; ++c) {
      if (scratch.counts[static_cast<std::size_t>(c)] == lowest) scratch.best.push_back(c);
    }
  } else {
    scratch.sums.assign(static_cast<std::size_t>(q), 0.0);
    for (NodeId v : g.neighbors(u)) {
      scratch.sums[static_cast<std::size_t>(col.colors[v])] += w.weights[v];
    }
    const double lowest = *std::min_element(scratch.sums.begin(), scratch.sums.end());
    for (int c = 0; c < q; ++c) {
      if (nearly_equal(scratch.sums[static_cast<std::size_t>(c)], lowest)) scratch.best.push_back(c);
    }
  }
}

bool step_with_scratch(const Graph& g, Coloring& col, const WeightScheme& w, NodeId u, Rng& rng,
                       StepScratch& scratch) {
  if (!has_defect(g, col, u)) return false;
  best_colors_into(g, col, w, u, scratch);
  const int pick = scratch.best[rng.bounded(scratch.best.size())];
  const bool changed = pick != col.colors[u];
  col.colors[u] = pick;
  return changed;
}

}  // namespace

const char* to_string(TerminatedBy t) {
  switch (t) {
    case TerminatedBy::Proper: return "proper";
    case TerminatedBy::Patience: return "patience";
    case TerminatedBy::MaxSweeps: return "max_sweeps";
  }
  return "unknown";
}

WeightScheme WeightScheme::from_graph(const Graph& g, double beta) {
  WeightScheme w;
  w.beta = beta;
  const std::size_t n = g.node_count();
  w.weights.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    const auto k = static_cast<double>(g.degree(u));
    w.weights[u] = (k == 0.0 && beta < 0.0) ? 0.0 : std::pow(k, beta);
  }
  return w;
}

Coloring random_coloring(std::size_t n, int q, std::uint64_t seed) {
  if (q < 1) throw std::invalid_argument("random_coloring: q must be >= 1");
  Rng rng(seed);
  Coloring col;
  col.q = q;
  col.colors.resize(n);
  for (auto& c : col.colors) c = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(q)));
  return col;
}

bool has_defect(const Graph& g, const Coloring& col, NodeId u) {
  const int own = col.colors[u];
  for (NodeId v : g.neighbors(u)) {
    if (col.colors[v] == own) return true;
  }
  return false;
}

double candidate_lci(const Graph& g, const Coloring& col, const WeightScheme& w, NodeId u, int c) {
  check_color(col, c);
  double total = 0.0;
  for (NodeId v : g.neighbors(u)) {
    if (col.colors[v] == c) total += w.weights[v];
  }
  return total;
}

double lci(const Graph& g, const Coloring& col, const WeightScheme& w, NodeId u) {
  return candidate_lci(g, col, w, u, col.colors[u]);
}

std::vector<int> best_colors(const Graph& g, const Coloring& col, const WeightScheme& w, NodeId u) {
  g.degree(u);  // range check
  StepScratch scratch;
  best_colors_into(g, col, w, u, scratch);
  return scratch.best;
}

bool ddc_step(const Graph& g, Coloring& col, const WeightScheme& w, NodeId u, Rng& rng) {
  g.degree(u);  // range check
  StepScratch scratch;
  return step_with_scratch(g, col, w, u, rng, scratch);
}

std::size_t count_defective_edges(const Graph& g, const Coloring& col) {
  std::size_t count = 0;
  const std::size_t n = g.node_count();
  for (NodeId u = 0; u < n; ++u) {
    const int own = col.colors[u];
    for (NodeId v : g.neighbors(u)) {
      if (v > u && col.colors[v] == own) ++count;
    }
  }
  return count;
}

DdcResult run_ddc(const Graph& g, const DdcConfig& cfg) {
  if (cfg.q < 1) throw std::invalid_argument("run_ddc: q must be >= 1");
  if (cfg.max_sweeps < 1) throw std::invalid_argument("run_ddc: max_sweeps must be >= 1");
  if (cfg.patience_sweeps < 1) throw std::invalid_argument("run_ddc: patience_sweeps must be >= 1");

  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  Rng rng(cfg.seed);

  DdcResult res;
  res.final_coloring.q = cfg.q;
  res.final_coloring.colors.resize(n);
  for (auto& c : res.final_coloring.colors) {
    c = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(cfg.q)));
  }
  Coloring& col = res.final_coloring;

  const WeightScheme w = WeightScheme::from_graph(g, cfg.beta);
  const auto f_d = [m](std::size_t defects) {
    return m == 0 ? 0.0 : static_cast<double>(defects) / static_cast<double>(m);
  };

  std::size_t defects = count_defective_edges(g, col);
  if (cfg.record_trajectory) res.trajectory.emplace_back(0, f_d(defects));
  if (defects == 0 || n == 0) {
    res.terminated_by = TerminatedBy::Proper;
    return res;
  }

  StepScratch scratch;
  std::size_t best_defects = defects;
  int stalled_sweeps = 0;
  res.terminated_by = TerminatedBy::MaxSweeps;
  for (int sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto u = static_cast<NodeId>(rng.bounded(n));
      if (step_with_scratch(g, col, w, u, rng, scratch)) ++res.updates_applied;
    }
    res.sweeps_run = sweep;
    defects = count_defective_edges(g, col);
    if (cfg.record_trajectory) res.trajectory.emplace_back(sweep, f_d(defects));
    if (defects == 0) {
      res.terminated_by = TerminatedBy::Proper;
      break;
    }
    if (defects < best_defects) {
      best_defects = defects;
      stalled_sweeps = 0;
    } else if (++stalled_sweeps >= cfg.patience_sweeps) {
      res.terminated_by = TerminatedBy::Patience;
      break;
    }
  }
  return res;
}

}  // namespace netcolor
