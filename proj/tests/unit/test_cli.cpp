#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "netcolor/cli.hpp"
#include "netcolor/edge_list_io.hpp"
#include "test_util.hpp"

using namespace netcolor;
using netcolor::test::CaptureStdout;
using netcolor::test::TempDir;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("color subcommand runs end to end") {
  CaptureStdout capture;
  const int rc =
      cli_main({"color", "--er", "1000", "0.015", "--q", "10", "--beta", "0", "--seed", "7"});
  CHECK(rc == 0);
  CHECK(capture.text().find("f_d=") != std::string::npos);
  CHECK(capture.text().find("terminated_by=") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CaptureStdout capture;
  CHECK(cli_main({"frobnicate"}) == 2);
  CHECK(cli_main({"color", "--er", "10", "0.5", "--q", "3", "--wat"}) == 2);
  CHECK(cli_main({"color", "--er", "10", "0.5"}) == 2);          // missing --q
  CHECK(cli_main({"color", "--q", "3"}) == 2);                   // missing network
  CHECK(cli_main({}) == 2);                                      // missing subcommand
  CHECK(cli_main({"--help"}) == 0);
}

TEST_CASE("missing input files exit nonzero and name the path") {
  CaptureStdout capture;
  const int rc = cli_main({"metrics", "--input", "/nonexistent/g.edges", "--coloring", "c.txt"});
  CHECK(rc == 1);
}

TEST_CASE("generate then color then metrics round trip") {
  TempDir dir;
  CaptureStdout capture;
  const std::string edges = dir.file("g.edges").string();
  const std::string coloring = dir.file("c.txt").string();
  const std::string color_metrics = dir.file("color.json").string();
  const std::string metrics_metrics = dir.file("metrics.json").string();

  REQUIRE(cli_main({"generate", "--er", "60", "0.1", "--seed", "4", "--out", edges}) == 0);
  REQUIRE(cli_main({"color", "--input", edges, "--no-largest-component", "--q", "4", "--seed",
                    "9", "--coloring-out", coloring, "--out", color_metrics}) == 0);
  REQUIRE(cli_main({"metrics", "--input", edges, "--no-largest-component", "--coloring", coloring,
                    "--out", metrics_metrics}) == 0);

  const auto from_color = nlohmann::json::parse(slurp(color_metrics));
  const auto from_metrics = nlohmann::json::parse(slurp(metrics_metrics));
  CHECK(from_color.at("f_d") == from_metrics.at("f_d"));
  CHECK(from_color.at("r_max") == from_metrics.at("r_max"));
}

TEST_CASE("metrics on a proper coloring") {
  TempDir dir;
  CaptureStdout capture;
  const std::string edges = dir.file("path.edges").string();
  {
    std::ofstream out(edges);
    out << "0 1\n1 2\n";
  }
  const std::string coloring = dir.file("proper.txt").string();
  {
    std::ofstream out(coloring);
    out << "# q=2\n0 0\n1 1\n2 0\n";
  }
  const std::string metrics_out = dir.file("m.json").string();
  REQUIRE(cli_main({"metrics", "--input", edges, "--coloring", coloring, "--out", metrics_out}) ==
          0);
  const auto rec = nlohmann::json::parse(slurp(metrics_out));
  CHECK(rec.at("f_d") == 0.0);
  CHECK(rec.at("r_max") == 1);
}

TEST_CASE("sweep output files carry the fixed header and a manifest") {
  TempDir dir;
  CaptureStdout capture;
  const std::string out = dir.file("rows.csv").string();
  REQUIRE(cli_main({"sweep-colors", "--er", "40", "0.15", "--qs", "3,4", "--betas", "0", "--runs",
                    "2", "--seed", "5", "--workers", "1", "--out", out}) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind(kRowCsvHeader, 0) == 0);
  // 2 schemes x 2 q x 2 runs = 8 rows plus the header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
  CHECK(std::filesystem::exists(out + ".manifest.json"));
}

TEST_CASE("identical sweep invocations produce identical data files") {
  TempDir dir;
  CaptureStdout capture;
  const std::vector<std::string> base{"sweep-beta", "--sf",     "80",  "2.5", "3",
                                      "--q",        "3",        "--betas", "0,1", "--runs",
                                      "2",          "--seed",   "11",  "--workers"};
  auto args_with_out = [&](const std::string& out, const std::string& workers) {
    std::vector<std::string> args = base;
    args.push_back(workers);
    args.push_back("--out");
    args.push_back(out);
    return args;
  };
  const std::string a = dir.file("a.csv").string();
  const std::string b = dir.file("b.csv").string();
  REQUIRE(cli_main(args_with_out(a, "1")) == 0);
  REQUIRE(cli_main(args_with_out(b, "2")) == 0);  // worker count must not matter
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("profile emits a csv trajectory") {
  TempDir dir;
  CaptureStdout capture;
  const std::string out = dir.file("profile.csv").string();
  REQUIRE(cli_main({"profile", "--er", "30", "0.2", "--q", "3", "--runs", "3", "--seed", "2",
                    "--workers", "1", "--out", out}) == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("sweep,mean_f_d", 0) == 0);
}

TEST_CASE("sweep-community splits output per p_in") {
  TempDir dir;
  CaptureStdout capture;
  const std::string prefix = dir.file("comm").string();
  REQUIRE(cli_main({"sweep-community", "--n", "60", "--p-total", "0.2", "--pins", "0.1,0.2",
                    "--qs", "3", "--runs", "2", "--seed", "3", "--workers", "1", "--out",
                    prefix}) == 0);
  CHECK(std::filesystem::exists(prefix + "_pin0.1.csv"));
  CHECK(std::filesystem::exists(prefix + "_pin0.2.csv"));
  CHECK(std::filesystem::exists(prefix + ".manifest.json"));
}
