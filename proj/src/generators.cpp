#include "netcolor/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "netcolor/edge_list_io.hpp"

namespace netcolor {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
  }
}

}  // namespace

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p, "p");
  Rng rng(seed);
  std::vector<Edge> edges;
  if (p > 0.0 && n > 1) {
    edges.reserve(static_cast<std::size_t>(0.5 * p * static_cast<double>(n) * (n - 1)) + 16);
    for (NodeId u = 0; u + 1 < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (rng.uniform01() < p) edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<int> sample_powerlaw_degrees(std::size_t n, double gamma, int k_min, Rng& rng) {
  if (gamma <= 1.0) throw std::invalid_argument("gamma must be > 1");
  if (k_min < 1) throw std::invalid_argument("k_min must be >= 1");
  if (n < 2 || static_cast<std::size_t>(k_min) >= n) {
    throw std::invalid_argument("k_min must be < n and n >= 2");
  }
  const int k_max = static_cast<int>(n) - 1;
  std::vector<double> cdf(static_cast<std::size_t>(k_max - k_min + 1));
  double acc = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    acc += std::pow(static_cast<double>(k), -gamma);
    cdf[static_cast<std::size_t>(k - k_min)] = acc;
  }
  auto draw = [&]() {
    const double u = rng.uniform01() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::size_t>(std::min<std::ptrdiff_t>(
        it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    return k_min + static_cast<int>(idx);
  };

  std::vector<int> degrees(n);
  long long sum = 0;
  for (auto& d : degrees) {
    d = draw();
    sum += d;
  }
  // Parity fix: resample one node until the stub count is even. Fails only
  // for degenerate parameter choices where every reachable sum is odd.
  constexpr int kMaxParityRetries = 128;
  for (int attempt = 0; sum % 2 != 0; ++attempt) {
    if (attempt >= kMaxParityRetries) {
      throw std::runtime_error("configuration model: could not reach an even degree sum for n=" +
                               std::to_string(n) + ", k_min=" + std::to_string(k_min));
    }
    const auto idx = static_cast<std::size_t>(rng.bounded(n));
    sum -= degrees[idx];
    degrees[idx] = draw();
    sum += degrees[idx];
  }
  return degrees;
}

Graph gen_powerlaw_config(std::size_t n, double gamma, int k_min, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<int> degrees = sample_powerlaw_degrees(n, gamma, k_min, rng);

  std::vector<NodeId> stubs;
  std::size_t total = 0;
  for (int d : degrees) total += static_cast<std::size_t>(d);
  stubs.reserve(total);
  for (NodeId u = 0; u < n; ++u) {
    for (int i = 0; i < degrees[u]; ++i) stubs.push_back(u);
  }
  // Fisher-Yates shuffle, then pair consecutive stubs.
  for (std::size_t i = stubs.size() - 1; i > 0; --i) {
    std::swap(stubs[i], stubs[rng.bounded(i + 1)]);
  }
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    if (stubs[i] == stubs[i + 1]) continue;  // erase self-loops
    edges.emplace_back(stubs[i], stubs[i + 1]);
  }
  return Graph::from_edges(n, edges);  // duplicate pairs erased here
}

Graph gen_two_community(std::size_t n, double p_in, double p_out, std::uint64_t seed) {
  check_probability(p_in, "p_in");
  check_probability(p_out, "p_out");
  Rng rng(seed);
  const std::size_t group_a = (n + 1) / 2;
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const bool same_group = (u < group_a) == (v < group_a);
      const double p = same_group ? p_in : p_out;
      if (rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string GraphSpec::describe() const {
  char buf[160];
  if (const auto* er_spec = std::get_if<ErSpec>(&source)) {
    std::snprintf(buf, sizeof(buf), "er(n=%zu,p=%g)", er_spec->n, er_spec->p);
  } else if (const auto* sf_spec = std::get_if<SfSpec>(&source)) {
    std::snprintf(buf, sizeof(buf), "sf(n=%zu,gamma=%g,k_min=%d)", sf_spec->n, sf_spec->gamma,
                  sf_spec->k_min);
  } else if (const auto* tc = std::get_if<TwoCommunitySpec>(&source)) {
    std::snprintf(buf, sizeof(buf), "two_community(n=%zu,p_in=%g,p_out=%g)", tc->n, tc->p_in,
                  tc->p_out);
  } else {
    const auto& file = std::get<FileSpec>(source);
    return "file(" + file.path + (file.largest_component ? ",largest_component" : "") + ")";
  }
  return buf;
}

void validate(const GraphSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ErSpec>) {
          if (s.n < 1) throw std::invalid_argument("er: n must be >= 1");
          check_probability(s.p, "p");
        } else if constexpr (std::is_same_v<T, SfSpec>) {
          if (s.gamma <= 1.0) throw std::invalid_argument("sf: gamma must be > 1");
          if (s.k_min < 1 || static_cast<std::size_t>(s.k_min) >= s.n) {
            throw std::invalid_argument("sf: k_min must be in [1, n-1]");
          }
        } else if constexpr (std::is_same_v<T, TwoCommunitySpec>) {
          if (s.n < 1) throw std::invalid_argument("two_community: n must be >= 1");
          check_probability(s.p_in, "p_in");
          check_probability(s.p_out, "p_out");
        } else {
          if (s.path.empty()) throw std::invalid_argument("file: empty path");
        }
      },
      spec.source);
}

Graph realize(const GraphSpec& spec, std::uint64_t seed) {
  validate(spec);
  return std::visit(
      [&](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ErSpec>) {
          return gen_er(s.n, s.p, seed);
        } else if constexpr (std::is_same_v<T, SfSpec>) {
          return gen_powerlaw_config(s.n, s.gamma, s.k_min, seed);
        } else if constexpr (std::is_same_v<T, TwoCommunitySpec>) {
          return gen_two_community(s.n, s.p_in, s.p_out, seed);
        } else {
          EdgeListOptions options;
          options.take_largest_component = s.largest_component;
          return load_edge_list(s.path, options).graph;
        }
      },
      spec.source);
}

}  // namespace netcolor
