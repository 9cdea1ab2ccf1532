#include "netcolor/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "netcolor/metrics.hpp"

namespace netcolor {

namespace {

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  if (workers == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = hw ? hw : 1;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct Moments {
  std::size_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double standard_error() const {
    if (count < 2) return 0.0;
    const double n = static_cast<double>(count);
    const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    return std::sqrt(var / n);
  }
};

}  // namespace

const char* to_string(Scheme s) { return s == Scheme::Random ? "random" : "ddc"; }

const char* to_string(Objective o) {
  return o == Objective::FractionDefective ? "f_d" : "r_max";
}

std::uint64_t cell_seed(std::uint64_t base_seed, Scheme scheme, int q, double beta, int run) {
  if (scheme == Scheme::Random) beta = 0.0;
  if (beta == 0.0) beta = 0.0;  // canonicalize -0.0
  std::uint64_t h = mix_seed(base_seed, 0x636f6c6f72ULL);  // "color"
  h = mix_seed(h, static_cast<std::uint64_t>(scheme));
  h = mix_seed(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(q)));
  h = mix_seed(h, std::bit_cast<std::uint64_t>(beta));
  h = mix_seed(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(run)));
  return h;
}

std::uint64_t graph_seed(std::uint64_t base_seed, int run) {
  return mix_seed(mix_seed(base_seed, 0x6772617068ULL),  // "graph"
                  static_cast<std::uint64_t>(static_cast<std::int64_t>(run)));
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.runs_per_point < 1) throw std::invalid_argument("run_sweep: runs_per_point must be >= 1");
  if (spec.q_values.empty() || spec.schemes.empty()) {
    throw std::invalid_argument("run_sweep: q_values and schemes must be nonempty");
  }
  validate(spec.graph_spec);
  const bool has_random =
      std::find(spec.schemes.begin(), spec.schemes.end(), Scheme::Random) != spec.schemes.end();
  const bool has_ddc =
      std::find(spec.schemes.begin(), spec.schemes.end(), Scheme::Ddc) != spec.schemes.end();
  const std::vector<int> qs = sorted_unique(spec.q_values);
  const std::vector<double> betas = sorted_unique(spec.beta_values);
  if (has_ddc && betas.empty()) {
    throw std::invalid_argument("run_sweep: beta_values must be nonempty for the ddc scheme");
  }

  const bool regenerate = spec.regenerate_graph_per_run && !spec.graph_spec.is_file();
  const std::size_t graph_count = regenerate ? static_cast<std::size_t>(spec.runs_per_point) : 1;
  std::vector<std::optional<Graph>> graphs(graph_count);
  if (spec.graph_spec.is_file()) {
    graphs[0] = realize(spec.graph_spec, 0);  // loader errors propagate
  } else {
    parallel_for(graph_count, spec.workers, [&](std::size_t i) {
      try {
        graphs[i] = realize(spec.graph_spec,
                            graph_seed(spec.base_seed, regenerate ? static_cast<int>(i) : 0));
      } catch (const std::runtime_error&) {
        // generation failure: the affected cells are skipped and counted
      }
    });
  }

  struct Cell {
    Scheme scheme;
    int q;
    double beta;
    int run;
  };
  std::vector<Cell> cells;
  if (has_random) {
    for (int q : qs) {
      for (int run = 0; run < spec.runs_per_point; ++run) {
        cells.push_back({Scheme::Random, q, 0.0, run});
      }
    }
  }
  if (has_ddc) {
    for (int q : qs) {
      for (double beta : betas) {
        for (int run = 0; run < spec.runs_per_point; ++run) {
          cells.push_back({Scheme::Ddc, q, beta, run});
        }
      }
    }
  }

  std::vector<std::optional<SweepRow>> slots(cells.size());
  parallel_for(cells.size(), spec.workers, [&](std::size_t i) {
    const Cell& cell = cells[i];
    const auto& graph_slot = graphs[regenerate ? static_cast<std::size_t>(cell.run) : 0];
    if (!graph_slot) return;
    const Graph& g = *graph_slot;
    const std::uint64_t seed = cell_seed(spec.base_seed, cell.scheme, cell.q, cell.beta, cell.run);
    SweepRow row;
    row.scheme = cell.scheme;
    row.q = cell.q;
    row.beta = cell.beta;
    row.run = cell.run;
    row.seed = seed;
    MetricsRecord rec;
    if (cell.scheme == Scheme::Random) {
      rec = measure(g, random_coloring(g.node_count(), cell.q, seed));
    } else {
      DdcConfig cfg;
      cfg.q = cell.q;
      cfg.beta = cell.beta;
      cfg.seed = seed;
      cfg.max_sweeps = spec.max_sweeps;
      cfg.patience_sweeps = spec.patience_sweeps;
      const DdcResult res = run_ddc(g, cfg);
      rec = measure(g, res.final_coloring);
      row.sweeps = res.sweeps_run;
      row.terminated_by = res.terminated_by;
    }
    row.f_d = rec.f_d;
    row.r_max = rec.r_max;
    row.defective_edges = rec.defective_edge_count;
    row.max_defective_degree = rec.max_defective_degree;
    slots[i] = row;
  });

  SweepResult out;
  out.rows.reserve(cells.size());
  for (const auto& slot : slots) {
    if (slot) {
      out.rows.push_back(*slot);
    } else {
      ++out.generation_failures;
    }
  }
  return out;
}

std::vector<SummaryPoint> summarize(const std::vector<SweepRow>& rows) {
  std::vector<SummaryPoint> out;
  Moments f_d_acc;
  Moments r_max_acc;
  auto flush = [&](const SweepRow& row) {
    SummaryPoint point;
    point.scheme = row.scheme;
    point.q = row.q;
    point.beta = row.beta;
    point.runs = f_d_acc.count;
    point.mean_f_d = f_d_acc.mean();
    point.stderr_f_d = f_d_acc.standard_error();
    point.mean_r_max = r_max_acc.mean();
    point.stderr_r_max = r_max_acc.standard_error();
    out.push_back(point);
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& row = rows[i];
    f_d_acc.add(row.f_d);
    r_max_acc.add(static_cast<double>(row.r_max));
    const bool last_of_group = i + 1 == rows.size() || rows[i + 1].scheme != row.scheme ||
                               rows[i + 1].q != row.q || rows[i + 1].beta != row.beta;
    if (last_of_group) {
      flush(row);
      f_d_acc = {};
      r_max_acc = {};
    }
  }
  return out;
}

BetaSearchResult find_optimal_beta(const GraphSpec& graph_spec, int q, double grid_step, int runs,
                                   Objective objective, std::uint64_t seed, unsigned workers) {
  if (!(grid_step > 0.0)) throw std::invalid_argument("find_optimal_beta: grid_step must be > 0");
  std::vector<double> betas;
  for (int i = 0;; ++i) {
    double beta = -2.0 + static_cast<double>(i) * grid_step;
    if (beta > 2.0 + grid_step * 1e-9) break;
    if (std::abs(beta) < 1e-12) beta = 0.0;
    betas.push_back(beta);
  }

  SweepSpec spec;
  spec.graph_spec = graph_spec;
  spec.q_values = {q};
  spec.beta_values = betas;
  spec.schemes = {Scheme::Ddc};
  spec.runs_per_point = runs;
  spec.base_seed = seed;
  spec.workers = workers;
  const SweepResult swept = run_sweep(spec);
  const std::vector<SummaryPoint> points = summarize(swept.rows);

  BetaSearchResult result;
  result.q = q;
  result.objective = objective;
  bool first = true;
  double best_value = 0.0;
  for (const SummaryPoint& point : points) {
    const double value =
        objective == Objective::FractionDefective ? point.mean_f_d : point.mean_r_max;
    result.grid.emplace_back(point.beta, value);
    if (first || value < best_value) {  // ties keep the smallest beta
      first = false;
      best_value = value;
      result.beta_star = point.beta;
    }
  }
  if (first) throw std::runtime_error("find_optimal_beta: no grid point produced results");
  return result;
}

std::vector<std::pair<int, double>> convergence_profile(const GraphSpec& graph_spec, int q,
                                                        double beta, int runs, std::uint64_t seed,
                                                        int max_sweeps, int patience_sweeps,
                                                        unsigned workers) {
  if (runs < 1) throw std::invalid_argument("convergence_profile: runs must be >= 1");
  validate(graph_spec);
  std::optional<Graph> shared;
  if (graph_spec.is_file()) shared = realize(graph_spec, 0);

  std::vector<std::vector<double>> trajectories(static_cast<std::size_t>(runs));
  parallel_for(static_cast<std::size_t>(runs), workers, [&](std::size_t run) {
    const Graph g = shared ? *shared : realize(graph_spec, graph_seed(seed, static_cast<int>(run)));
    DdcConfig cfg;
    cfg.q = q;
    cfg.beta = beta;
    cfg.seed = cell_seed(seed, Scheme::Ddc, q, beta, static_cast<int>(run));
    cfg.max_sweeps = max_sweeps;
    cfg.patience_sweeps = patience_sweeps;
    cfg.record_trajectory = true;
    const DdcResult res = run_ddc(g, cfg);
    auto& out = trajectories[run];
    out.reserve(res.trajectory.size());
    for (const auto& [sweep, f_d] : res.trajectory) out.push_back(f_d);
  });

  std::size_t longest = 0;
  for (const auto& t : trajectories) longest = std::max(longest, t.size());
  std::vector<std::pair<int, double>> profile;
  profile.reserve(longest);
  for (std::size_t s = 0; s < longest; ++s) {
    double total = 0.0;
    for (const auto& t : trajectories) total += t[std::min(s, t.size() - 1)];
    profile.emplace_back(static_cast<int>(s), total / static_cast<double>(runs));
  }
  return profile;
}

}  // namespace netcolor
