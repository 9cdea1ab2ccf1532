#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "netcolor/experiments.hpp"

using namespace netcolor;

namespace {

SweepSpec basic_spec() {
  SweepSpec spec;
  spec.graph_spec = GraphSpec::er(3, 1.0);
  spec.q_values = {3};
  spec.beta_values = {0.0};
  spec.schemes = {Scheme::Ddc};
  spec.runs_per_point = 1;
  spec.base_seed = 99;
  spec.workers = 1;
  return spec;
}

const SummaryPoint* find_point(const std::vector<SummaryPoint>& points, Scheme scheme, int q,
                               double beta) {
  for (const auto& point : points) {
    if (point.scheme == scheme && point.q == q && point.beta == beta) return &point;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("single-cell sweep on a triangle reaches a proper coloring") {
  const SweepResult result = run_sweep(basic_spec());
  REQUIRE(result.rows.size() == 1);
  CHECK(result.generation_failures == 0);
  const SweepRow& row = result.rows[0];
  CHECK(row.scheme == Scheme::Ddc);
  CHECK(row.q == 3);
  CHECK(row.f_d == 0.0);
  CHECK(row.r_max == 1);
  CHECK(row.terminated_by == TerminatedBy::Proper);
}

TEST_CASE("random scheme with one color marks every edge defective") {
  SweepSpec spec = basic_spec();
  spec.graph_spec = GraphSpec::er(50, 0.2);
  spec.q_values = {1};
  spec.schemes = {Scheme::Random};
  spec.runs_per_point = 5;
  const SweepResult result = run_sweep(spec);
  REQUIRE(result.rows.size() == 5);
  for (const SweepRow& row : result.rows) {
    CHECK(row.f_d == 1.0);
    CHECK_FALSE(row.terminated_by.has_value());
    CHECK(row.sweeps == 0);
  }
}

TEST_CASE("sweeps are deterministic and order independent") {
  SweepSpec spec = basic_spec();
  spec.graph_spec = GraphSpec::er(60, 0.1);
  spec.q_values = {4, 3};
  spec.beta_values = {0.5, 0.0};
  spec.schemes = {Scheme::Ddc, Scheme::Random};
  spec.runs_per_point = 4;
  spec.workers = 2;

  const SweepResult first = run_sweep(spec);
  const SweepResult second = run_sweep(spec);
  CHECK(first.rows == second.rows);

  SweepSpec reordered = spec;
  reordered.q_values = {3, 4};
  reordered.beta_values = {0.0, 0.5};
  reordered.schemes = {Scheme::Random, Scheme::Ddc};
  reordered.workers = 1;
  CHECK(run_sweep(reordered).rows == first.rows);
}

TEST_CASE("cell contents do not depend on which other cells run") {
  SweepSpec narrow = basic_spec();
  narrow.graph_spec = GraphSpec::er(40, 0.15);
  narrow.q_values = {3};
  narrow.beta_values = {0.0};
  narrow.runs_per_point = 3;

  SweepSpec wide = narrow;
  wide.q_values = {2, 3, 5};
  wide.beta_values = {0.0, 1.0};
  wide.schemes = {Scheme::Random, Scheme::Ddc};

  const SweepResult narrow_result = run_sweep(narrow);
  const SweepResult wide_result = run_sweep(wide);
  for (const SweepRow& row : narrow_result.rows) {
    CHECK(std::count(wide_result.rows.begin(), wide_result.rows.end(), row) == 1);
  }
}

TEST_CASE("seed derivation is pure and collision-averse") {
  CHECK(cell_seed(1, Scheme::Ddc, 3, 0.5, 2) == cell_seed(1, Scheme::Ddc, 3, 0.5, 2));
  CHECK(cell_seed(1, Scheme::Ddc, 3, 0.5, 2) != cell_seed(1, Scheme::Ddc, 3, 0.5, 3));
  CHECK(cell_seed(1, Scheme::Ddc, 3, 0.5, 2) != cell_seed(1, Scheme::Ddc, 4, 0.5, 2));
  CHECK(cell_seed(1, Scheme::Ddc, 3, 0.5, 2) != cell_seed(2, Scheme::Ddc, 3, 0.5, 2));
  CHECK(cell_seed(1, Scheme::Random, 3, 0.25, 2) == cell_seed(1, Scheme::Random, 3, 0.75, 2));
  CHECK(cell_seed(1, Scheme::Ddc, 3, -0.0, 2) == cell_seed(1, Scheme::Ddc, 3, 0.0, 2));
  CHECK(graph_seed(1, 0) != graph_seed(1, 1));
}

TEST_CASE("ddc beats random coloring on average") {
  SweepSpec spec = basic_spec();
  spec.graph_spec = GraphSpec::er(200, 0.05);
  spec.q_values = {4};
  spec.schemes = {Scheme::Random, Scheme::Ddc};
  spec.runs_per_point = 30;
  spec.workers = 2;
  const auto points = summarize(run_sweep(spec).rows);
  const SummaryPoint* random_point = find_point(points, Scheme::Random, 4, 0.0);
  const SummaryPoint* ddc_point = find_point(points, Scheme::Ddc, 4, 0.0);
  REQUIRE(random_point != nullptr);
  REQUIRE(ddc_point != nullptr);
  const double combined_f_d =
      std::sqrt(random_point->stderr_f_d * random_point->stderr_f_d +
                ddc_point->stderr_f_d * ddc_point->stderr_f_d);
  CHECK(ddc_point->mean_f_d < random_point->mean_f_d - 2.0 * combined_f_d);
}

TEST_CASE("summarize") {
  SweepRow row;
  row.scheme = Scheme::Ddc;
  row.q = 3;
  row.beta = 0.0;
  row.f_d = 0.25;
  row.r_max = 4;

  SUBCASE("single row has zero standard error") {
    const auto points = summarize({row});
    REQUIRE(points.size() == 1);
    CHECK(points[0].runs == 1);
    CHECK(points[0].mean_f_d == 0.25);
    CHECK(points[0].stderr_f_d == 0.0);
    CHECK(points[0].mean_r_max == 4.0);
  }
  SUBCASE("identical rows have zero standard error") {
    const auto points = summarize({row, row});
    REQUIRE(points.size() == 1);
    CHECK(points[0].runs == 2);
    CHECK(points[0].stderr_f_d == 0.0);
  }
  SUBCASE("mean of zero and one is one half") {
    SweepRow zero = row;
    zero.f_d = 0.0;
    SweepRow one = row;
    one.f_d = 1.0;
    const auto points = summarize({zero, one});
    REQUIRE(points.size() == 1);
    CHECK(points[0].mean_f_d == 0.5);
    CHECK(points[0].stderr_f_d == doctest::Approx(0.5));
  }
  SUBCASE("groups split on coordinates") {
    SweepRow other = row;
    other.q = 4;
    const auto points = summarize({row, other});
    CHECK(points.size() == 2);
  }
}

TEST_CASE("find_optimal_beta") {
  SUBCASE("single grid point comes straight back") {
    const BetaSearchResult result =
        find_optimal_beta(GraphSpec::er(30, 0.2), 3, 5.0, 2, Objective::FractionDefective, 7, 1);
    REQUIRE(result.grid.size() == 1);
    CHECK(result.beta_star == -2.0);
    CHECK(result.grid[0].first == -2.0);
  }
  SUBCASE("grid covers the closed interval and contains exact zero") {
    const BetaSearchResult result =
        find_optimal_beta(GraphSpec::er(20, 0.3), 4, 0.5, 1, Objective::RMax, 3, 1);
    REQUIRE(result.grid.size() == 9);
    CHECK(result.grid.front().first == -2.0);
    CHECK(result.grid.back().first == 2.0);
    CHECK(std::any_of(result.grid.begin(), result.grid.end(),
                      [](const auto& p) { return p.first == 0.0; }));
  }
  SUBCASE("step must be positive") {
    CHECK_THROWS_AS(
        find_optimal_beta(GraphSpec::er(10, 0.5), 2, 0.0, 1, Objective::FractionDefective, 1, 1),
        std::invalid_argument);
  }
}

TEST_CASE("convergence profile") {
  SUBCASE("triangle with three colors reaches zero") {
    const auto profile = convergence_profile(GraphSpec::er(3, 1.0), 3, 0.0, 10, 5, 1000, 50, 2);
    REQUIRE_FALSE(profile.empty());
    CHECK(profile.front().first == 0);
    CHECK(profile.back().second == 0.0);
  }
  SUBCASE("single color stays flat at one") {
    const auto profile = convergence_profile(GraphSpec::er(20, 0.3), 1, 0.0, 5, 5, 200, 10, 1);
    for (const auto& [sweep, mean_f_d] : profile) CHECK(mean_f_d == 1.0);
  }
  SUBCASE("values stay in range and never rise at beta 0") {
    const auto profile = convergence_profile(GraphSpec::er(80, 0.1), 3, 0.0, 8, 21, 400, 50, 2);
    for (std::size_t i = 0; i < profile.size(); ++i) {
      CHECK(profile[i].second >= 0.0);
      CHECK(profile[i].second <= 1.0);
      CHECK(profile[i].first == static_cast<int>(i));
      if (i > 0) CHECK(profile[i].second <= profile[i - 1].second);
    }
  }
}

TEST_CASE("run_sweep validates its spec") {
  SweepSpec spec = basic_spec();
  spec.runs_per_point = 0;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = basic_spec();
  spec.q_values.clear();
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = basic_spec();
  spec.beta_values.clear();
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = basic_spec();
  spec.graph_spec = GraphSpec::er(0, 0.5);
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}
