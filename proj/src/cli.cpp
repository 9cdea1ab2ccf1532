#include "netcolor/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"
#include "netcolor/edge_list_io.hpp"
#include "netcolor/experiments.hpp"
#include "netcolor/metrics.hpp"
#include "netcolor/version.hpp"

namespace netcolor {

namespace {

using nlohmann::ordered_json;

std::size_t to_count(double v, const char* what) {
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e9) {
    throw std::invalid_argument(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Shared "--er / --sf / --community / --input" network selection.
struct GraphSourceOptions {
  std::vector<double> er;
  std::vector<double> sf;
  std::vector<double> community;
  std::string input;
  bool largest_component = true;

  void attach(CLI::App& cmd) {
    auto* group = cmd.add_option_group("network", "network source (choose exactly one)");
    group->add_option("--er", er, "Erdos-Renyi G(n,p): N P")->expected(2);
    group->add_option("--sf", sf, "power-law configuration model: N GAMMA KMIN")->expected(3);
    group->add_option("--community", community, "two-community model: N PIN POUT")->expected(3);
    group->add_option("--input", input, "edge-list file (whitespace pairs, '#' comments)");
    group->require_option(1);
    cmd.add_flag("--largest-component,!--no-largest-component", largest_component,
                 "restrict --input graphs to their largest connected component (default: on)");
  }

  GraphSpec spec() const {
    if (!er.empty()) return GraphSpec::er(to_count(er[0], "n"), er[1]);
    if (!sf.empty()) {
      return GraphSpec::sf(to_count(sf[0], "n"), sf[1],
                           static_cast<int>(to_count(sf[2], "k_min")));
    }
    if (!community.empty()) {
      return GraphSpec::two_community(to_count(community[0], "n"), community[1], community[2]);
    }
    return GraphSpec::file(input, largest_component);
  }
};

struct SweepCommonOptions {
  int runs = 150;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  int max_sweeps = 1000;
  int patience = 50;
  bool regenerate = true;
  std::string out = "-";
  std::string format = "csv";

  void attach(CLI::App& cmd) {
    cmd.add_option("--runs", runs, "independent runs per data point")->capture_default_str();
    cmd.add_option("--seed", seed, "base seed")->capture_default_str();
    cmd.add_option("--workers", workers, "worker threads (0 = hardware concurrency)")
        ->capture_default_str();
    cmd.add_option("--max-sweeps", max_sweeps, "sweep budget per run")->capture_default_str();
    cmd.add_option("--patience", patience, "sweeps without a new f_d minimum before stopping")
        ->capture_default_str();
    cmd.add_flag("--regenerate-graph,!--fixed-graph", regenerate,
                 "fresh graph per run vs one shared realization (files are always shared)");
    cmd.add_option("--out", out, "output path ('-' for stdout)")->capture_default_str();
    cmd.add_option("--format", format, "row format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  }

  RowFormat row_format() const { return format == "csv" ? RowFormat::Csv : RowFormat::Json; }

  void fill_manifest(ordered_json& config) const {
    config["runs"] = runs;
    config["seed"] = seed;
    config["max_sweeps"] = max_sweeps;
    config["patience_sweeps"] = patience;
    config["regenerate_graph_per_run"] = regenerate;
    config["format"] = format;
  }
};

bool row_less(const SweepRow& a, const SweepRow& b) {
  return std::tuple(static_cast<int>(a.scheme), a.q, a.beta, a.run) <
         std::tuple(static_cast<int>(b.scheme), b.q, b.beta, b.run);
}

void emit_rows(const std::vector<SweepRow>& rows, const SweepCommonOptions& common,
               const ordered_json& config) {
  if (common.out == "-") {
    if (common.row_format() == RowFormat::Csv) {
      std::cout << rows_to_csv(rows);
    } else {
      std::cout << rows_to_json(rows).dump(2) << '\n';
    }
    return;
  }
  write_rows(rows, common.row_format(), common.out);
  write_manifest(common.out, config);
}

void report_failures(std::size_t failures) {
  if (failures > 0) {
    std::cerr << "netcolor: warning: " << failures << " cell(s) skipped (graph generation failed)\n";
  }
}

std::ostream& side_channel(const SweepCommonOptions& common) {
  // keep stdout clean when the data rows go there
  return common.out == "-" ? std::cerr : std::cout;
}

void print_summary(std::ostream& os, const std::vector<SummaryPoint>& points,
                   std::optional<double> p_in = std::nullopt) {
  for (const SummaryPoint& point : points) {
    if (p_in) os << format_double(*p_in) << ',';
    os << to_string(point.scheme) << ',' << point.q << ',' << format_double(point.beta) << ','
       << point.runs << ',' << format_double(point.mean_f_d) << ','
       << format_double(point.stderr_f_d) << ',' << format_double(point.mean_r_max) << ','
       << format_double(point.stderr_r_max) << '\n';
  }
}

constexpr const char* kSummaryHeader =
    "scheme,q,beta,runs,mean_f_d,stderr_f_d,mean_r_max,stderr_r_max";

void print_metrics(std::ostream& os, const MetricsRecord& rec, const DdcResult* run,
                   bool json_format) {
  if (json_format) {
    ordered_json out;
    out["f_d"] = rec.f_d;
    out["r_max"] = rec.r_max;
    out["defective_edges"] = rec.defective_edge_count;
    out["max_defective_degree"] = rec.max_defective_degree;
    if (run) {
      out["sweeps"] = run->sweeps_run;
      out["updates_applied"] = run->updates_applied;
      out["terminated_by"] = to_string(run->terminated_by);
    }
    os << out.dump(2) << '\n';
    return;
  }
  os << "f_d=" << format_double(rec.f_d) << '\n';
  os << "r_max=" << rec.r_max << '\n';
  os << "defective_edges=" << rec.defective_edge_count << '\n';
  os << "max_defective_degree=" << rec.max_defective_degree << '\n';
  if (run) {
    os << "sweeps=" << run->sweeps_run << '\n';
    os << "updates_applied=" << run->updates_applied << '\n';
    os << "terminated_by=" << to_string(run->terminated_by) << '\n';
  }
}

std::vector<double> beta_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("--beta-step must be > 0");
  if (hi < lo) throw std::invalid_argument("--beta-max must be >= --beta-min");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    double beta = lo + static_cast<double>(i) * step;
    if (beta > hi + step * 1e-9) break;
    if (std::abs(beta) < 1e-12) beta = 0.0;
    out.push_back(beta);
  }
  return out;
}

// ---- subcommand bodies ----

int run_generate(const GraphSourceOptions& source, std::uint64_t seed, const std::string& out) {
  const GraphSpec spec = source.spec();
  const Graph g = realize(spec, seed);
  const std::vector<std::string> comments = {
      "netcolor edge list: " + spec.describe() + " seed=" + std::to_string(seed),
      "n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count())};
  if (out == "-") {
    for (const auto& c : comments) std::cout << "# " << c << '\n';
    for (const auto& [u, v] : g.edges()) std::cout << u << ' ' << v << '\n';
  } else {
    write_edge_list(out, g, comments);
  }
  return 0;
}

struct ColorArgs {
  int q = 0;
  double beta = 0.0;
  std::uint64_t seed = 0;
  int max_sweeps = 1000;
  int patience = 50;
  std::string coloring_out;
  std::string trajectory_out;
  std::string out;  // metrics json file
  std::string format = "text";
};

int run_color(const GraphSourceOptions& source, const ColorArgs& args) {
  const GraphSpec spec = source.spec();
  const Graph g = realize(spec, graph_seed(args.seed, 0));
  DdcConfig cfg;
  cfg.q = args.q;
  cfg.beta = args.beta;
  cfg.seed = cell_seed(args.seed, Scheme::Ddc, args.q, args.beta, 0);
  cfg.max_sweeps = args.max_sweeps;
  cfg.patience_sweeps = args.patience;
  cfg.record_trajectory = !args.trajectory_out.empty();
  const DdcResult res = run_ddc(g, cfg);
  const MetricsRecord rec = measure(g, res.final_coloring);

  if (!args.coloring_out.empty()) write_coloring(args.coloring_out, res.final_coloring);
  if (!args.trajectory_out.empty()) {
    std::ofstream traj(args.trajectory_out);
    if (!traj) throw std::runtime_error("cannot write to '" + args.trajectory_out + "'");
    traj << "sweep,f_d\n";
    for (const auto& [sweep, f_d] : res.trajectory) {
      traj << sweep << ',' << format_double(f_d) << '\n';
    }
  }
  print_metrics(std::cout, rec, &res, args.format == "json");
  if (!args.out.empty()) {
    std::ofstream metrics_file(args.out);
    if (!metrics_file) throw std::runtime_error("cannot write to '" + args.out + "'");
    print_metrics(metrics_file, rec, &res, true);
  }
  return 0;
}

int run_metrics(const GraphSourceOptions& source, std::uint64_t seed,
                const std::string& coloring_path, const std::string& format,
                const std::string& out) {
  const GraphSpec spec = source.spec();
  const Graph g = realize(spec, graph_seed(seed, 0));
  const Coloring col = read_coloring(coloring_path);
  if (col.colors.size() != g.node_count()) {
    throw std::invalid_argument("coloring has " + std::to_string(col.colors.size()) +
                                " nodes but the graph has " + std::to_string(g.node_count()));
  }
  const MetricsRecord rec = measure(g, col);
  print_metrics(std::cout, rec, nullptr, format == "json");
  if (!out.empty()) {
    std::ofstream metrics_file(out);
    if (!metrics_file) throw std::runtime_error("cannot write to '" + out + "'");
    print_metrics(metrics_file, rec, nullptr, true);
  }
  return 0;
}

struct BetaSweepArgs {
  std::vector<int> qs;
  std::vector<double> betas;  // explicit; overrides the grid
  double beta_min = -2.0;
  double beta_max = 2.0;
  double beta_step = 0.1;
  bool summary = false;
  bool report_optimal = false;
};

int run_sweep_beta(const GraphSourceOptions& source, const BetaSweepArgs& args,
                   const SweepCommonOptions& common) {
  SweepSpec spec;
  spec.graph_spec = source.spec();
  spec.regenerate_graph_per_run = common.regenerate;
  spec.q_values = args.qs;
  spec.beta_values =
      args.betas.empty() ? beta_grid(args.beta_min, args.beta_max, args.beta_step) : args.betas;
  spec.schemes = {Scheme::Ddc};
  spec.runs_per_point = common.runs;
  spec.base_seed = common.seed;
  spec.max_sweeps = common.max_sweeps;
  spec.patience_sweeps = common.patience;
  spec.workers = common.workers;

  const SweepResult result = run_sweep(spec);
  report_failures(result.generation_failures);

  ordered_json config;
  config["command"] = "sweep-beta";
  config["network"] = spec.graph_spec.describe();
  config["q_values"] = args.qs;
  config["beta_values"] = spec.beta_values;
  common.fill_manifest(config);
  emit_rows(result.rows, common, config);

  if (args.summary || args.report_optimal) {
    const auto points = summarize(result.rows);
    auto& os = side_channel(common);
    if (args.summary) {
      os << kSummaryHeader << '\n';
      print_summary(os, points);
    }
    if (args.report_optimal) {
      for (int q : spec.q_values) {
        for (Objective objective : {Objective::FractionDefective, Objective::RMax}) {
          bool first = true;
          double best_beta = 0.0;
          double best_value = 0.0;
          for (const SummaryPoint& point : points) {
            if (point.q != q || point.scheme != Scheme::Ddc) continue;
            const double value =
                objective == Objective::FractionDefective ? point.mean_f_d : point.mean_r_max;
            if (first || value < best_value) {
              first = false;
              best_value = value;
              best_beta = point.beta;
            }
          }
          if (!first) {
            os << "optimal_beta objective=" << to_string(objective) << " q=" << q << " beta="
               << format_double(best_beta) << " mean=" << format_double(best_value) << '\n';
          }
        }
      }
    }
  }
  return 0;
}

struct ColorSweepArgs {
  std::vector<int> qs;
  int q_min = 2;
  int q_max = 12;
  std::vector<double> betas{0.0};
  bool include_random = true;
  bool include_ddc = true;
  bool optimal_beta = false;
  double search_step = 0.1;
  int search_runs = 20;
  std::string objective = "f_d";
};

int run_sweep_colors(const GraphSourceOptions& source, const ColorSweepArgs& args,
                     const SweepCommonOptions& common) {
  std::vector<int> qs = args.qs;
  if (qs.empty()) {
    if (args.q_max < args.q_min) throw std::invalid_argument("--q-max must be >= --q-min");
    for (int q = args.q_min; q <= args.q_max; ++q) qs.push_back(q);
  }
  SweepSpec spec;
  spec.graph_spec = source.spec();
  spec.regenerate_graph_per_run = common.regenerate;
  spec.q_values = qs;
  spec.beta_values = args.betas;
  if (args.include_random) spec.schemes.push_back(Scheme::Random);
  if (args.include_ddc) spec.schemes.push_back(Scheme::Ddc);
  if (spec.schemes.empty()) {
    throw std::invalid_argument("nothing to do: both --no-random and --no-ddc given");
  }
  spec.runs_per_point = common.runs;
  spec.base_seed = common.seed;
  spec.max_sweeps = common.max_sweeps;
  spec.patience_sweeps = common.patience;
  spec.workers = common.workers;

  SweepResult result = run_sweep(spec);

  ordered_json config;
  config["command"] = "sweep-colors";
  config["network"] = spec.graph_spec.describe();
  config["q_values"] = qs;
  config["beta_values"] = args.betas;
  config["schemes"] = ordered_json::array();
  for (Scheme s : spec.schemes) config["schemes"].push_back(to_string(s));
  common.fill_manifest(config);

  if (args.optimal_beta) {
    const Objective objective =
        args.objective == "r_max" ? Objective::RMax : Objective::FractionDefective;
    ordered_json found = ordered_json::object();
    for (int q : qs) {
      const std::uint64_t search_seed = mix_seed(common.seed, 0x6265746173ULL + static_cast<std::uint64_t>(q));
      const BetaSearchResult search = find_optimal_beta(spec.graph_spec, q, args.search_step,
                                                        args.search_runs, objective, search_seed,
                                                        common.workers);
      found[std::to_string(q)] = search.beta_star;
      side_channel(common) << "optimal_beta q=" << q << " beta=" << format_double(search.beta_star)
                           << " (objective " << to_string(objective) << ")\n";
      SweepSpec star_spec = spec;
      star_spec.schemes = {Scheme::Ddc};
      star_spec.q_values = {q};
      star_spec.beta_values = {search.beta_star};
      SweepResult star_rows = run_sweep(star_spec);
      result.rows.insert(result.rows.end(), star_rows.rows.begin(), star_rows.rows.end());
      result.generation_failures += star_rows.generation_failures;
    }
    config["optimal_beta"] = found;
    config["search_step"] = args.search_step;
    config["search_runs"] = args.search_runs;
    config["objective"] = args.objective;
    std::sort(result.rows.begin(), result.rows.end(), row_less);
    result.rows.erase(std::unique(result.rows.begin(), result.rows.end()), result.rows.end());
  }

  report_failures(result.generation_failures);
  emit_rows(result.rows, common, config);
  return 0;
}

struct CommunitySweepArgs {
  std::size_t n = 1000;
  double p_total = 0.02;
  std::vector<double> pins;
  std::vector<int> qs{4, 6};
  std::vector<double> betas{0.0};
  bool include_random = false;
  bool summary = false;
};

int run_sweep_community(const CommunitySweepArgs& args, const SweepCommonOptions& common) {
  if (args.pins.empty()) throw std::invalid_argument("--pins is required");
  for (double p_in : args.pins) {
    if (p_in < 0.0 || p_in > args.p_total) {
      throw std::invalid_argument("each p_in must lie in [0, p_total]");
    }
  }

  ordered_json config;
  config["command"] = "sweep-community";
  config["n"] = args.n;
  config["p_total"] = args.p_total;
  config["p_in_values"] = args.pins;
  config["q_values"] = args.qs;
  config["beta_values"] = args.betas;
  config["include_random"] = args.include_random;
  common.fill_manifest(config);

  std::vector<std::pair<double, std::vector<SummaryPoint>>> summaries;
  for (double p_in : args.pins) {
    SweepSpec spec;
    spec.graph_spec = GraphSpec::two_community(args.n, p_in, args.p_total - p_in);
    spec.regenerate_graph_per_run = common.regenerate;
    spec.q_values = args.qs;
    spec.beta_values = args.betas;
    if (args.include_random) spec.schemes.push_back(Scheme::Random);
    spec.schemes.push_back(Scheme::Ddc);
    spec.runs_per_point = common.runs;
    // shared base seed: run r sees coupled realizations across the p_in axis
    spec.base_seed = common.seed;
    spec.max_sweeps = common.max_sweeps;
    spec.patience_sweeps = common.patience;
    spec.workers = common.workers;

    const SweepResult result = run_sweep(spec);
    report_failures(result.generation_failures);
    summaries.emplace_back(p_in, summarize(result.rows));

    if (common.out == "-") {
      std::cout << "# p_in=" << format_double(p_in) << " p_out=" << format_double(args.p_total - p_in)
                << '\n';
      if (common.row_format() == RowFormat::Csv) {
        std::cout << rows_to_csv(result.rows);
      } else {
        std::cout << rows_to_json(result.rows).dump(2) << '\n';
      }
    } else {
      const std::string suffix = common.row_format() == RowFormat::Csv ? ".csv" : ".json";
      write_rows(result.rows, common.row_format(),
                 common.out + "_pin" + format_double(p_in) + suffix);
    }
  }
  if (common.out != "-") write_manifest(common.out, config);

  if (args.summary) {
    auto& os = side_channel(common);
    os << "p_in," << kSummaryHeader << '\n';
    for (const auto& [p_in, points] : summaries) print_summary(os, points, p_in);
  }
  return 0;
}

struct ProfileArgs {
  int q = 0;
  double beta = 0.0;
};

int run_profile(const GraphSourceOptions& source, const ProfileArgs& args,
                const SweepCommonOptions& common) {
  const GraphSpec spec = source.spec();
  const auto profile = convergence_profile(spec, args.q, args.beta, common.runs, common.seed,
                                           common.max_sweeps, common.patience, common.workers);
  std::string text = "sweep,mean_f_d\n";
  for (const auto& [sweep, mean_f_d] : profile) {
    text += std::to_string(sweep);
    text += ',';
    text += format_double(mean_f_d);
    text += '\n';
  }
  if (common.out == "-") {
    std::cout << text;
  } else {
    std::ofstream out(common.out);
    if (!out) throw std::runtime_error("cannot write to '" + common.out + "'");
    out << text;
    ordered_json config;
    config["command"] = "profile";
    config["network"] = spec.describe();
    config["q"] = args.q;
    config["beta"] = args.beta;
    common.fill_manifest(config);
    write_manifest(common.out, config);
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"decentralized network coloring: generators, LCI-minimizing runs, diversity "
               "metrics, sweep harness"};
  app.name("netcolor");
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "realize a network and write an edge list");
  GraphSourceOptions generate_source;
  generate_source.attach(*generate);
  std::uint64_t generate_seed = 0;
  std::string generate_out = "-";
  generate->add_option("--seed", generate_seed, "generator seed")->capture_default_str();
  generate->add_option("--out", generate_out, "output path ('-' for stdout)")
      ->capture_default_str();

  // color
  auto* color = app.add_subcommand("color", "run one coloring and print its metrics");
  GraphSourceOptions color_source;
  color_source.attach(*color);
  ColorArgs color_args;
  color->add_option("--q", color_args.q, "number of colors")->required();
  color->add_option("--beta", color_args.beta, "degree-bias exponent")->capture_default_str();
  color->add_option("--seed", color_args.seed, "base seed")->capture_default_str();
  color->add_option("--max-sweeps", color_args.max_sweeps, "sweep budget")->capture_default_str();
  color->add_option("--patience", color_args.patience,
                    "sweeps without a new f_d minimum before stopping")
      ->capture_default_str();
  color->add_option("--coloring-out", color_args.coloring_out, "write the final coloring here");
  color->add_option("--trajectory-out", color_args.trajectory_out,
                    "record the per-sweep f_d trajectory as CSV");
  color->add_option("--out", color_args.out, "also write metrics as JSON to this file");
  color->add_option("--format", color_args.format, "stdout format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // metrics
  auto* metrics = app.add_subcommand("metrics", "measure a stored coloring against a network");
  GraphSourceOptions metrics_source;
  metrics_source.attach(*metrics);
  std::string metrics_coloring;
  std::string metrics_format = "text";
  std::string metrics_out;
  std::uint64_t metrics_seed = 0;
  metrics->add_option("--coloring", metrics_coloring, "coloring file ('node color' lines)")
      ->required();
  metrics->add_option("--seed", metrics_seed, "seed used when the graph was generated")
      ->capture_default_str();
  metrics->add_option("--format", metrics_format, "stdout format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  metrics->add_option("--out", metrics_out, "also write metrics as JSON to this file");

  // sweep-beta
  auto* sweep_beta = app.add_subcommand(
      "sweep-beta", "sweep the degree-bias exponent over a grid for fixed color counts");
  GraphSourceOptions sweep_beta_source;
  sweep_beta_source.attach(*sweep_beta);
  BetaSweepArgs beta_args;
  SweepCommonOptions beta_common;
  sweep_beta->add_option("--q", beta_args.qs, "color count(s)")->required()->delimiter(',');
  sweep_beta->add_option("--betas", beta_args.betas, "explicit beta list (overrides the grid)")
      ->delimiter(',');
  sweep_beta->add_option("--beta-min", beta_args.beta_min, "grid start")->capture_default_str();
  sweep_beta->add_option("--beta-max", beta_args.beta_max, "grid end")->capture_default_str();
  sweep_beta->add_option("--beta-step", beta_args.beta_step, "grid step")->capture_default_str();
  sweep_beta->add_flag("--summary", beta_args.summary, "print per-point mean/stderr");
  sweep_beta->add_flag("--report-optimal", beta_args.report_optimal,
                       "print the grid minimum per q for both objectives");
  beta_common.attach(*sweep_beta);

  // sweep-colors
  auto* sweep_colors = app.add_subcommand(
      "sweep-colors", "sweep the number of colors under random and LCI-minimizing schemes");
  GraphSourceOptions sweep_colors_source;
  sweep_colors_source.attach(*sweep_colors);
  ColorSweepArgs colors_args;
  SweepCommonOptions colors_common;
  sweep_colors->add_option("--qs", colors_args.qs, "explicit color counts")->delimiter(',');
  sweep_colors->add_option("--q-min", colors_args.q_min, "range start when --qs is absent")
      ->capture_default_str();
  sweep_colors->add_option("--q-max", colors_args.q_max, "range end when --qs is absent")
      ->capture_default_str();
  sweep_colors->add_option("--betas", colors_args.betas, "beta value(s) for the ddc scheme")
      ->delimiter(',')
      ->capture_default_str();
  sweep_colors->add_flag("--random,!--no-random", colors_args.include_random,
                         "include the random-coloring scheme (default: on)");
  sweep_colors->add_flag("--ddc,!--no-ddc", colors_args.include_ddc,
                         "include the LCI-minimizing scheme (default: on)");
  sweep_colors->add_flag("--optimal-beta", colors_args.optimal_beta,
                         "per q, grid-search beta and add rows at the optimum");
  sweep_colors->add_option("--search-step", colors_args.search_step, "grid step for --optimal-beta")
      ->capture_default_str();
  sweep_colors->add_option("--search-runs", colors_args.search_runs,
                           "runs per grid point for --optimal-beta")
      ->capture_default_str();
  sweep_colors->add_option("--objective", colors_args.objective, "objective for --optimal-beta")
      ->check(CLI::IsMember({"f_d", "r_max"}))
      ->capture_default_str();
  colors_common.attach(*sweep_colors);

  // sweep-community
  auto* sweep_community = app.add_subcommand(
      "sweep-community", "vary community strength at fixed edge budget (p_in + p_out constant)");
  CommunitySweepArgs community_args;
  SweepCommonOptions community_common;
  sweep_community->add_option("--n", community_args.n, "nodes")->capture_default_str();
  sweep_community->add_option("--p-total", community_args.p_total, "fixed p_in + p_out")
      ->capture_default_str();
  sweep_community->add_option("--pins", community_args.pins, "within-group probabilities")
      ->required()
      ->delimiter(',');
  sweep_community->add_option("--qs", community_args.qs, "color counts")
      ->delimiter(',')
      ->capture_default_str();
  sweep_community->add_option("--betas", community_args.betas, "beta value(s)")
      ->delimiter(',')
      ->capture_default_str();
  sweep_community->add_flag("--random", community_args.include_random,
                            "also include the random-coloring scheme");
  sweep_community->add_flag("--summary", community_args.summary,
                            "print per-point mean/stderr incl. p_in");
  community_common.attach(*sweep_community);

  // profile
  auto* profile = app.add_subcommand("profile", "mean f_d per sweep across runs");
  GraphSourceOptions profile_source;
  profile_source.attach(*profile);
  ProfileArgs profile_args;
  SweepCommonOptions profile_common;
  profile_common.runs = 20;
  profile->add_option("--q", profile_args.q, "number of colors")->required();
  profile->add_option("--beta", profile_args.beta, "degree-bias exponent")->capture_default_str();
  profile_common.attach(*profile);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("netcolor");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generate->parsed()) return run_generate(generate_source, generate_seed, generate_out);
    if (color->parsed()) return run_color(color_source, color_args);
    if (metrics->parsed()) {
      return run_metrics(metrics_source, metrics_seed, metrics_coloring, metrics_format,
                         metrics_out);
    }
    if (sweep_beta->parsed()) return run_sweep_beta(sweep_beta_source, beta_args, beta_common);
    if (sweep_colors->parsed()) {
      return run_sweep_colors(sweep_colors_source, colors_args, colors_common);
    }
    if (sweep_community->parsed()) return run_sweep_community(community_args, community_common);
    if (profile->parsed()) return run_profile(profile_source, profile_args, profile_common);
  } catch (const std::exception& e) {
    std::cerr << "netcolor: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args);
}

}  // namespace netcolor
