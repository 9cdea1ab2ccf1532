#include "netcolor/edge_list_io.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "netcolor/version.hpp"

namespace netcolor {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string termination_name(const std::optional<TerminatedBy>& t) {
  return t ? to_string(*t) : "none";
}

std::optional<TerminatedBy> termination_from_name(const std::string& name) {
  if (name == "none") return std::nullopt;
  if (name == "proper") return TerminatedBy::Proper;
  if (name == "patience") return TerminatedBy::Patience;
  if (name == "max_sweeps") return TerminatedBy::MaxSweeps;
  throw std::runtime_error("unknown termination value '" + name + "'");
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "random") return Scheme::Random;
  if (name == "ddc") return Scheme::Ddc;
  throw std::runtime_error("unknown scheme value '" + name + "'");
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write to '" + path.string() + "'");
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return in;
}

bool is_comment_or_blank(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r\n");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

LoadedGraph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options) {
  if (options.index_base && *options.index_base != 0 && *options.index_base != 1) {
    throw std::invalid_argument("index_base must be 0 or 1");
  }
  std::ifstream in = open_for_read(path);

  std::vector<std::pair<long long, long long>> label_edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw std::runtime_error("parse error in '" + path.string() + "' line " +
                               std::to_string(line_no) + ": expected two integer tokens");
    }
    if (a == b && options.drop_self_loops) continue;
    label_edges.emplace_back(a, b);
  }
  if (label_edges.empty()) {
    throw std::invalid_argument("no usable edges in '" + path.string() + "'");
  }

  std::vector<long long> labels;
  labels.reserve(label_edges.size() * 2);
  for (const auto& [a, b] : label_edges) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const auto dense = [&](long long label) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), label) -
                               labels.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(label_edges.size());
  for (const auto& [a, b] : label_edges) edges.emplace_back(dense(a), dense(b));
  if (options.dedup) {
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  LoadedGraph out;
  out.detected_base = options.index_base.value_or(labels.front() == 1 ? 1 : 0);
  out.graph = Graph::from_edges(labels.size(), edges);
  out.node_labels = labels;
  if (options.take_largest_component) {
    InducedSubgraph lcc = largest_connected_component(out.graph);
    std::vector<long long> kept_labels(lcc.new_to_old.size());
    for (std::size_t i = 0; i < lcc.new_to_old.size(); ++i) {
      kept_labels[i] = out.node_labels[lcc.new_to_old[i]];
    }
    out.graph = std::move(lcc.graph);
    out.node_labels = std::move(kept_labels);
  }
  return out;
}

void write_edge_list(const std::filesystem::path& path, const Graph& g,
                     const std::vector<std::string>& header_comments) {
  std::ofstream out = open_for_write(path);
  for (const auto& comment : header_comments) out << "# " << comment << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (!out.flush()) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void write_coloring(const std::filesystem::path& path, const Coloring& col) {
  std::ofstream out = open_for_write(path);
  out << "# q=" << col.q << '\n';
  for (std::size_t u = 0; u < col.colors.size(); ++u) out << u << ' ' << col.colors[u] << '\n';
  if (!out.flush()) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Coloring read_coloring(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::string line;
  std::size_t line_no = 0;
  std::optional<int> q;
  std::vector<std::pair<long long, int>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto pos = line.find("q=");
      if (pos != std::string::npos) q = std::stoi(line.substr(pos + 2));
      continue;
    }
    std::istringstream fields(line);
    long long node = 0;
    int color = 0;
    std::string extra;
    if (!(fields >> node >> color) || (fields >> extra)) {
      throw std::runtime_error("parse error in '" + path.string() + "' line " +
                               std::to_string(line_no) + ": expected 'node color'");
    }
    entries.emplace_back(node, color);
  }
  if (entries.empty()) throw std::invalid_argument("no entries in '" + path.string() + "'");

  Coloring col;
  col.colors.assign(entries.size(), -1);
  int max_color = 0;
  for (const auto& [node, color] : entries) {
    if (node < 0 || static_cast<std::size_t>(node) >= entries.size()) {
      throw std::runtime_error("coloring '" + path.string() + "': node ids must be dense in [0, " +
                               std::to_string(entries.size()) + ")");
    }
    if (color < 0) throw std::runtime_error("coloring '" + path.string() + "': negative color");
    if (col.colors[static_cast<std::size_t>(node)] != -1) {
      throw std::runtime_error("coloring '" + path.string() + "': duplicate node " +
                               std::to_string(node));
    }
    col.colors[static_cast<std::size_t>(node)] = color;
    max_color = std::max(max_color, color);
  }
  col.q = q.value_or(max_color + 1);
  if (col.q <= max_color) {
    throw std::runtime_error("coloring '" + path.string() + "': color " +
                             std::to_string(max_color) + " exceeds q=" + std::to_string(col.q));
  }
  return col;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::string out(kRowCsvHeader);
  out += '\n';
  for (const SweepRow& row : rows) {
    out += to_string(row.scheme);
    out += ',';
    out += std::to_string(row.q);
    out += ',';
    out += format_double(row.beta);
    out += ',';
    out += std::to_string(row.run);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += format_double(row.f_d);
    out += ',';
    out += std::to_string(row.r_max);
    out += ',';
    out += std::to_string(row.defective_edges);
    out += ',';
    out += std::to_string(row.max_defective_degree);
    out += ',';
    out += std::to_string(row.sweeps);
    out += ',';
    out += termination_name(row.terminated_by);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json rows_to_json(const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    arr.push_back({{"scheme", to_string(row.scheme)},
                   {"q", row.q},
                   {"beta", row.beta},
                   {"run", row.run},
                   {"seed", row.seed},
                   {"f_d", row.f_d},
                   {"r_max", row.r_max},
                   {"defective_edges", row.defective_edges},
                   {"max_defective_degree", row.max_defective_degree},
                   {"sweeps", row.sweeps},
                   {"terminated_by", termination_name(row.terminated_by)}});
  }
  return arr;
}

void write_rows(const std::vector<SweepRow>& rows, RowFormat format,
                const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  if (format == RowFormat::Csv) {
    out << rows_to_csv(rows);
  } else {
    out << rows_to_json(rows).dump(2) << '\n';
  }
  if (!out.flush()) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::vector<SweepRow> read_rows_json(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  nlohmann::json arr = nlohmann::json::parse(in);
  std::vector<SweepRow> rows;
  rows.reserve(arr.size());
  for (const auto& item : arr) {
    SweepRow row;
    row.scheme = scheme_from_name(item.at("scheme").get<std::string>());
    row.q = item.at("q").get<int>();
    row.beta = item.at("beta").get<double>();
    row.run = item.at("run").get<int>();
    row.seed = item.at("seed").get<std::uint64_t>();
    row.f_d = item.at("f_d").get<double>();
    row.r_max = item.at("r_max").get<std::size_t>();
    row.defective_edges = item.at("defective_edges").get<std::size_t>();
    row.max_defective_degree = item.at("max_defective_degree").get<std::size_t>();
    row.sweeps = item.at("sweeps").get<int>();
    row.terminated_by = termination_from_name(item.at("terminated_by").get<std::string>());
    rows.push_back(row);
  }
  return rows;
}

void write_manifest(const std::filesystem::path& data_path, const nlohmann::ordered_json& config) {
  nlohmann::ordered_json manifest;
  manifest["tool"] = "netcolor";
  manifest["version"] = kToolVersion;
  char stamp[32];
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);
  manifest["created_utc"] = stamp;
  manifest["data_file"] = data_path.filename().string();
  manifest["config"] = config;

  std::filesystem::path manifest_path = data_path;
  manifest_path += ".manifest.json";
  std::ofstream out = open_for_write(manifest_path);
  out << manifest.dump(2) << '\n';
}

}  // namespace netcolor
