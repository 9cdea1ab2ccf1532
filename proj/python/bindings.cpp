#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "netcolor/edge_list_io.hpp"
#include "netcolor/experiments.hpp"
#include "netcolor/metrics.hpp"
#include "netcolor/version.hpp"

namespace py = pybind11;
using namespace netcolor;

namespace {

py::list old_to_new_as_pylist(const InducedSubgraph& sub) {
  py::list out;
  for (NodeId id : sub.old_to_new) {
    if (id == kNoNode) {
      out.append(py::none());
    } else {
      out.append(py::int_(id));
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Decentralized network coloring: generators, LCI-minimizing dynamics, diversity "
            "metrics and sweep harness";
  m.attr("__version__") = kToolVersion;

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next_u64", &Rng::next_u64)
      .def("bounded", &Rng::bounded, py::arg("n"))
      .def("uniform01", &Rng::uniform01);
  m.def("mix_seed", &mix_seed, py::arg("seed"), py::arg("salt"));

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("u"))
      .def("neighbors",
           [](const Graph& g, NodeId u) {
             const auto view = g.neighbors(u);
             return std::vector<NodeId>(view.begin(), view.end());
           },
           py::arg("u"))
      .def("max_degree", &Graph::max_degree)
      .def("edges", &Graph::edges)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream os;
        os << "Graph(n=" << g.node_count() << ", m=" << g.edge_count() << ")";
        return os.str();
      });

  py::class_<ComponentLabeling>(m, "ComponentLabeling")
      .def_readonly("label", &ComponentLabeling::label)
      .def_readonly("component_sizes", &ComponentLabeling::component_sizes)
      .def_property_readonly("component_count", &ComponentLabeling::component_count);
  m.def("connected_components", &connected_components, py::arg("g"));

  py::class_<InducedSubgraph>(m, "InducedSubgraph")
      .def_readonly("graph", &InducedSubgraph::graph)
      .def_property_readonly("old_to_new", &old_to_new_as_pylist)
      .def_readonly("new_to_old", &InducedSubgraph::new_to_old);
  m.def("largest_connected_component", &largest_connected_component, py::arg("g"));

  m.def("gen_er", &gen_er, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("gen_powerlaw_config", &gen_powerlaw_config, py::arg("n"), py::arg("gamma"),
        py::arg("k_min"), py::arg("seed"));
  m.def("gen_two_community", &gen_two_community, py::arg("n"), py::arg("p_in"), py::arg("p_out"),
        py::arg("seed"));

  py::class_<GraphSpec>(m, "GraphSpec")
      .def_static("er", &GraphSpec::er, py::arg("n"), py::arg("p"))
      .def_static("sf", &GraphSpec::sf, py::arg("n"), py::arg("gamma"), py::arg("k_min"))
      .def_static("two_community", &GraphSpec::two_community, py::arg("n"), py::arg("p_in"),
                  py::arg("p_out"))
      .def_static("file", &GraphSpec::file, py::arg("path"), py::arg("largest_component") = true)
      .def_property_readonly("is_file", &GraphSpec::is_file)
      .def("describe", &GraphSpec::describe)
      .def("__repr__", [](const GraphSpec& s) { return "GraphSpec(" + s.describe() + ")"; });
  m.def("realize", &realize, py::arg("spec"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<Coloring>(m, "Coloring")
      .def(py::init([](std::vector<int> colors, int q) {
             return Coloring{std::move(colors), q};
           }),
           py::arg("colors"), py::arg("q"))
      .def_readwrite("colors", &Coloring::colors)
      .def_readwrite("q", &Coloring::q)
      .def(py::self == py::self);

  py::class_<WeightScheme>(m, "WeightScheme")
      .def_static("from_graph", &WeightScheme::from_graph, py::arg("g"), py::arg("beta"))
      .def_readwrite("beta", &WeightScheme::beta)
      .def_readwrite("weights", &WeightScheme::weights);

  py::enum_<TerminatedBy>(m, "TerminatedBy")
      .value("Proper", TerminatedBy::Proper)
      .value("Patience", TerminatedBy::Patience)
      .value("MaxSweeps", TerminatedBy::MaxSweeps);

  py::class_<DdcConfig>(m, "DdcConfig")
      .def(py::init([](int q, double beta, std::uint64_t seed, int max_sweeps, int patience_sweeps,
                       bool record_trajectory) {
             return DdcConfig{q, beta, seed, max_sweeps, patience_sweeps, record_trajectory};
           }),
           py::arg("q"), py::arg("beta") = 0.0, py::arg("seed") = 0,
           py::arg("max_sweeps") = 1000, py::arg("patience_sweeps") = 50,
           py::arg("record_trajectory") = false)
      .def_readwrite("q", &DdcConfig::q)
      .def_readwrite("beta", &DdcConfig::beta)
      .def_readwrite("seed", &DdcConfig::seed)
      .def_readwrite("max_sweeps", &DdcConfig::max_sweeps)
      .def_readwrite("patience_sweeps", &DdcConfig::patience_sweeps)
      .def_readwrite("record_trajectory", &DdcConfig::record_trajectory);

  py::class_<DdcResult>(m, "DdcResult")
      .def_readonly("final_coloring", &DdcResult::final_coloring)
      .def_readonly("sweeps_run", &DdcResult::sweeps_run)
      .def_readonly("updates_applied", &DdcResult::updates_applied)
      .def_readonly("trajectory", &DdcResult::trajectory)
      .def_readonly("terminated_by", &DdcResult::terminated_by)
      .def(py::self == py::self);

  m.def("random_coloring", &random_coloring, py::arg("n"), py::arg("q"), py::arg("seed"));
  m.def("has_defect", &has_defect, py::arg("g"), py::arg("coloring"), py::arg("u"));
  m.def("candidate_lci", &candidate_lci, py::arg("g"), py::arg("coloring"), py::arg("weights"),
        py::arg("u"), py::arg("c"));
  m.def("lci", &lci, py::arg("g"), py::arg("coloring"), py::arg("weights"), py::arg("u"));
  m.def("best_colors", &best_colors, py::arg("g"), py::arg("coloring"), py::arg("weights"),
        py::arg("u"));
  m.def("ddc_step", &ddc_step, py::arg("g"), py::arg("coloring"), py::arg("weights"), py::arg("u"),
        py::arg("rng"));
  m.def("count_defective_edges", &count_defective_edges, py::arg("g"), py::arg("coloring"));
  m.def("run_ddc", &run_ddc, py::arg("g"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_ddc",
      [](const Graph& g, int q, double beta, std::uint64_t seed, int max_sweeps,
         int patience_sweeps, bool record_trajectory) {
        const DdcConfig cfg{q, beta, seed, max_sweeps, patience_sweeps, record_trajectory};
        py::gil_scoped_release release;
        return run_ddc(g, cfg);
      },
      py::arg("g"), py::arg("q"), py::arg("beta") = 0.0, py::arg("seed") = 0,
      py::arg("max_sweeps") = 1000, py::arg("patience_sweeps") = 50,
      py::arg("record_trajectory") = false);

  py::class_<MetricsRecord>(m, "MetricsRecord")
      .def_readonly("f_d", &MetricsRecord::f_d)
      .def_readonly("r_max", &MetricsRecord::r_max)
      .def_readonly("defective_edge_count", &MetricsRecord::defective_edge_count)
      .def_readonly("defective_component_sizes", &MetricsRecord::defective_component_sizes)
      .def_readonly("max_defective_degree", &MetricsRecord::max_defective_degree)
      .def("__repr__", [](const MetricsRecord& r) {
        std::ostringstream os;
        os << "MetricsRecord(f_d=" << r.f_d << ", r_max=" << r.r_max << ")";
        return os.str();
      });
  m.def("fraction_defective", &fraction_defective, py::arg("g"), py::arg("coloring"));
  m.def("defective_subgraph", &defective_subgraph, py::arg("g"), py::arg("coloring"));
  m.def("r_max", &r_max, py::arg("g"), py::arg("coloring"));
  m.def("max_defective_degree", &max_defective_degree, py::arg("g"), py::arg("coloring"));
  m.def("measure", &measure, py::arg("g"), py::arg("coloring"));

  py::enum_<Scheme>(m, "Scheme").value("Random", Scheme::Random).value("Ddc", Scheme::Ddc);
  py::enum_<Objective>(m, "Objective")
      .value("FractionDefective", Objective::FractionDefective)
      .value("RMax", Objective::RMax);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init([](GraphSpec graph_spec, std::vector<int> q_values,
                       std::vector<double> beta_values, std::vector<Scheme> schemes,
                       int runs_per_point, std::uint64_t base_seed, bool regenerate_graph_per_run,
                       int max_sweeps, int patience_sweeps, unsigned workers) {
             SweepSpec spec;
             spec.graph_spec = std::move(graph_spec);
             spec.q_values = std::move(q_values);
             spec.beta_values = std::move(beta_values);
             spec.schemes = std::move(schemes);
             spec.runs_per_point = runs_per_point;
             spec.base_seed = base_seed;
             spec.regenerate_graph_per_run = regenerate_graph_per_run;
             spec.max_sweeps = max_sweeps;
             spec.patience_sweeps = patience_sweeps;
             spec.workers = workers;
             return spec;
           }),
           py::arg("graph_spec"), py::arg("q_values"), py::arg("beta_values") = std::vector<double>{0.0},
           py::arg("schemes") = std::vector<Scheme>{Scheme::Ddc}, py::arg("runs_per_point") = 150,
           py::arg("base_seed") = 0, py::arg("regenerate_graph_per_run") = true,
           py::arg("max_sweeps") = 1000, py::arg("patience_sweeps") = 50, py::arg("workers") = 0)
      .def_readwrite("graph_spec", &SweepSpec::graph_spec)
      .def_readwrite("q_values", &SweepSpec::q_values)
      .def_readwrite("beta_values", &SweepSpec::beta_values)
      .def_readwrite("schemes", &SweepSpec::schemes)
      .def_readwrite("runs_per_point", &SweepSpec::runs_per_point)
      .def_readwrite("base_seed", &SweepSpec::base_seed)
      .def_readwrite("regenerate_graph_per_run", &SweepSpec::regenerate_graph_per_run)
      .def_readwrite("max_sweeps", &SweepSpec::max_sweeps)
      .def_readwrite("patience_sweeps", &SweepSpec::patience_sweeps)
      .def_readwrite("workers", &SweepSpec::workers);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("scheme", &SweepRow::scheme)
      .def_readonly("q", &SweepRow::q)
      .def_readonly("beta", &SweepRow::beta)
      .def_readonly("run", &SweepRow::run)
      .def_readonly("seed", &SweepRow::seed)
      .def_readonly("f_d", &SweepRow::f_d)
      .def_readonly("r_max", &SweepRow::r_max)
      .def_readonly("defective_edges", &SweepRow::defective_edges)
      .def_readonly("max_defective_degree", &SweepRow::max_defective_degree)
      .def_readonly("sweeps", &SweepRow::sweeps)
      .def_readonly("terminated_by", &SweepRow::terminated_by)
      .def(py::self == py::self)
      .def("__repr__", [](const SweepRow& r) {
        std::ostringstream os;
        os << "SweepRow(" << to_string(r.scheme) << ", q=" << r.q << ", beta=" << r.beta
           << ", run=" << r.run << ", f_d=" << r.f_d << ", r_max=" << r.r_max << ")";
        return os.str();
      });

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("rows", &SweepResult::rows)
      .def_readonly("generation_failures", &SweepResult::generation_failures);
  m.def("run_sweep", &run_sweep, py::arg("spec"), py::call_guard<py::gil_scoped_release>());
  m.def("cell_seed", &cell_seed, py::arg("base_seed"), py::arg("scheme"), py::arg("q"),
        py::arg("beta"), py::arg("run"));
  m.def("graph_seed", &graph_seed, py::arg("base_seed"), py::arg("run"));

  py::class_<SummaryPoint>(m, "SummaryPoint")
      .def_readonly("scheme", &SummaryPoint::scheme)
      .def_readonly("q", &SummaryPoint::q)
      .def_readonly("beta", &SummaryPoint::beta)
      .def_readonly("runs", &SummaryPoint::runs)
      .def_readonly("mean_f_d", &SummaryPoint::mean_f_d)
      .def_readonly("stderr_f_d", &SummaryPoint::stderr_f_d)
      .def_readonly("mean_r_max", &SummaryPoint::mean_r_max)
      .def_readonly("stderr_r_max", &SummaryPoint::stderr_r_max);
  m.def("summarize", &summarize, py::arg("rows"));

  py::class_<BetaSearchResult>(m, "BetaSearchResult")
      .def_readonly("q", &BetaSearchResult::q)
      .def_readonly("beta_star", &BetaSearchResult::beta_star)
      .def_readonly("objective", &BetaSearchResult::objective)
      .def_readonly("grid", &BetaSearchResult::grid);
  m.def("find_optimal_beta", &find_optimal_beta, py::arg("graph_spec"), py::arg("q"),
        py::arg("grid_step") = 0.1, py::arg("runs") = 20,
        py::arg("objective") = Objective::FractionDefective, py::arg("seed") = 0,
        py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("convergence_profile", &convergence_profile, py::arg("graph_spec"), py::arg("q"),
        py::arg("beta") = 0.0, py::arg("runs") = 20, py::arg("seed") = 0,
        py::arg("max_sweeps") = 1000, py::arg("patience_sweeps") = 50, py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());

  py::class_<LoadedGraph>(m, "LoadedGraph")
      .def_readonly("graph", &LoadedGraph::graph)
      .def_readonly("node_labels", &LoadedGraph::node_labels)
      .def_readonly("detected_base", &LoadedGraph::detected_base);
  m.def(
      "load_edge_list",
      [](const std::string& path, bool drop_self_loops, bool dedup, bool take_largest_component,
         std::optional<int> index_base) {
        EdgeListOptions options;
        options.drop_self_loops = drop_self_loops;
        options.dedup = dedup;
        options.take_largest_component = take_largest_component;
        options.index_base = index_base;
        return load_edge_list(path, options);
      },
      py::arg("path"), py::arg("drop_self_loops") = true, py::arg("dedup") = true,
      py::arg("take_largest_component") = false, py::arg("index_base") = std::nullopt);
  m.def(
      "write_edge_list",
      [](const std::string& path, const Graph& g, const std::vector<std::string>& comments) {
        write_edge_list(path, g, comments);
      },
      py::arg("path"), py::arg("g"), py::arg("comments") = std::vector<std::string>{});
  m.def("write_coloring",
        [](const std::string& path, const Coloring& col) { write_coloring(path, col); },
        py::arg("path"), py::arg("coloring"));
  m.def("read_coloring", [](const std::string& path) { return read_coloring(path); },
        py::arg("path"));
  m.def("rows_to_csv", &rows_to_csv, py::arg("rows"));
  m.def(
      "write_rows",
      [](const std::vector<SweepRow>& rows, const std::string& format, const std::string& path) {
        if (format != "csv" && format != "json") {
          throw std::invalid_argument("format must be 'csv' or 'json'");
        }
        write_rows(rows, format == "csv" ? RowFormat::Csv : RowFormat::Json, path);
      },
      py::arg("rows"), py::arg("format"), py::arg("path"));
  m.def("read_rows_json", [](const std::string& path) { return read_rows_json(path); },
        py::arg("path"));
}
