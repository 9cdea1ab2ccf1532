#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "netcolor/coloring.hpp"
#include "netcolor/generators.hpp"

namespace netcolor {

enum class Scheme { Random, Ddc };
const char* to_string(Scheme s);

enum class Objective { FractionDefective, RMax };
const char* to_string(Objective o);

struct SweepSpec {
  GraphSpec graph_spec;
  bool regenerate_graph_per_run = true;  // file sources are always loaded once
  std::vector<int> q_values;
  std::vector<double> beta_values;  // ignored by the Random scheme
  std::vector<Scheme> schemes;
  int runs_per_point = 150;
  std::uint64_t base_seed = 0;
  int max_sweeps = 1000;
  int patience_sweeps = 50;
  unsigned workers = 0;  // 0 = hardware concurrency
};

struct SweepRow {
  Scheme scheme = Scheme::Ddc;
  int q = 1;
  double beta = 0.0;
  int run = 0;
  std::uint64_t seed = 0;
  double f_d = 0.0;
  std::size_t r_max = 1;
  std::size_t defective_edges = 0;
  std::size_t max_defective_degree = 0;
  int sweeps = 0;
  std::optional<TerminatedBy> terminated_by;  // empty for Random rows

  bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ordered by (scheme, q, beta, run)
  std::size_t generation_failures = 0;
};

// Seed of the coloring stream for one sweep cell; a pure function of the
// cell coordinates, so cell order never affects row contents. Random cells
// canonicalize beta to 0.
std::uint64_t cell_seed(std::uint64_t base_seed, Scheme scheme, int q, double beta, int run);

// Seed of the graph realization for one run index. Independent of scheme,
// q and beta, so rows at the same run index compare colorings of the same
// graph.
std::uint64_t graph_seed(std::uint64_t base_seed, int run);

// Runs every (scheme, q, beta, run) cell: realizes the graph (fresh per run
// when regenerate_graph_per_run, one shared realization otherwise), applies
// the scheme, measures. q and beta axes are sorted and deduplicated; the
// Random scheme collapses the beta axis to a single entry. Cells whose graph
// generation failed are skipped and counted.
SweepResult run_sweep(const SweepSpec& spec);

struct SummaryPoint {
  Scheme scheme = Scheme::Ddc;
  int q = 1;
  double beta = 0.0;
  std::size_t runs = 0;
  double mean_f_d = 0.0;
  double stderr_f_d = 0.0;
  double mean_r_max = 0.0;
  double stderr_r_max = 0.0;
};

// Per-point mean and standard error of f_d and r_max, grouped by
// (scheme, q, beta) in row order. Standard error is 0 for a single run.
std::vector<SummaryPoint> summarize(const std::vector<SweepRow>& rows);

struct BetaSearchResult {
  int q = 1;
  double beta_star = 0.0;
  Objective objective = Objective::FractionDefective;
  std::vector<std::pair<double, double>> grid;  // (beta, mean objective)
};

// Evaluates the mean objective on the closed grid {-2, -2+step, ..., 2} and
// returns the minimizing beta; ties go to the smallest beta.
BetaSearchResult find_optimal_beta(const GraphSpec& graph_spec, int q, double grid_step, int runs,
                                   Objective objective, std::uint64_t seed, unsigned workers = 0);

// Mean f_d per sweep across runs, aligned by sweep index; runs that stop
// early are padded with their terminal value, so the last entry equals the
// mean terminal f_d.
std::vector<std::pair<int, double>> convergence_profile(const GraphSpec& graph_spec, int q,
                                                        double beta, int runs, std::uint64_t seed,
                                                        int max_sweeps = 1000,
                                                        int patience_sweeps = 50,
                                                        unsigned workers = 0);

}  // namespace netcolor
