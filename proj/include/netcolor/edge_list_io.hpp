#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "netcolor/coloring.hpp"
#include "netcolor/experiments.hpp"
#include "netcolor/graph.hpp"

namespace netcolor {

struct EdgeListOptions {
  bool drop_self_loops = true;
  // Duplicate pairs collapse during graph construction regardless; this only
  // controls the explicit pre-pass.
  bool dedup = true;
  bool take_largest_component = false;
  std::optional<int> index_base;  // 0 or 1; auto-detected from the minimum label when unset
};

struct LoadedGraph {
  Graph graph;
  std::vector<long long> node_labels;  // dense id -> original file label
  int detected_base = 0;
};

// Whitespace-separated "u v" integer pairs, one per line; lines starting
// with '#' are comments. Arbitrary integer labels are remapped densely in
// sorted label order. Throws std::runtime_error naming the file for an
// unreadable path and the line number for malformed lines, and
// std::invalid_argument for files without usable data lines.
LoadedGraph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options = {});

// One "u v" line per edge (u < v, sorted); comment lines are written first.
void write_edge_list(const std::filesystem::path& path, const Graph& g,
                     const std::vector<std::string>& header_comments = {});

// One "node color" line per node, preceded by a "# q=<q>" comment so the
// color count survives a round trip.
void write_coloring(const std::filesystem::path& path, const Coloring& col);
Coloring read_coloring(const std::filesystem::path& path);

enum class RowFormat { Csv, Json };

inline constexpr const char* kRowCsvHeader =
    "scheme,q,beta,run,seed,f_d,r_max,defective_edges,max_defective_degree,sweeps,terminated_by";

// CSV uses the fixed header above with floats at 9 significant digits; JSON
// is an array of objects with the same fields and round-trips exactly.
std::string rows_to_csv(const std::vector<SweepRow>& rows);
nlohmann::ordered_json rows_to_json(const std::vector<SweepRow>& rows);
void write_rows(const std::vector<SweepRow>& rows, RowFormat format,
                const std::filesystem::path& path);
std::vector<SweepRow> read_rows_json(const std::filesystem::path& path);

// Reproducibility sidecar written next to a data file ("<data>.manifest.json"):
// tool version, creation timestamp, and the full parameter echo needed to
// regenerate the data byte-identically. The timestamp lives only here, never
// in the data file.
void write_manifest(const std::filesystem::path& data_path, const nlohmann::ordered_json& config);

}  // namespace netcolor
