#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "netcolor/graph.hpp"
#include "netcolor/rng.hpp"

namespace netcolor {

// G(n, p): every unordered pair is wired independently with probability p.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

// Degree sequence for the configuration model: n i.i.d. draws from the
// discrete power law P(k) ∝ k^-gamma on [k_min, n-1] (inverse CDF), with the
// sum made even by resampling one node. Throws after bounded retries when
// the parameters make an even sum unreachable. Exposed for tests.
std::vector<int> sample_powerlaw_degrees(std::size_t n, double gamma, int k_min, Rng& rng);

// Erased configuration model: stubs are shuffled and paired, then self-loops
// and duplicate edges are dropped so the result is simple.
Graph gen_powerlaw_config(std::size_t n, double gamma, int k_min, std::uint64_t seed);

// Planted two-community model: nodes [0, ceil(n/2)) form group A, the rest
// group B. Within-group pairs are wired with p_in, cross-group with p_out.
// With p_in == p_out this is exactly G(n, p).
Graph gen_two_community(std::size_t n, double p_in, double p_out, std::uint64_t seed);

struct ErSpec {
  std::size_t n = 0;
  double p = 0.0;
  bool operator==(const ErSpec&) const = default;
};

struct SfSpec {
  std::size_t n = 0;
  double gamma = 2.5;
  int k_min = 1;
  bool operator==(const SfSpec&) const = default;
};

struct TwoCommunitySpec {
  std::size_t n = 0;
  double p_in = 0.0;
  double p_out = 0.0;
  bool operator==(const TwoCommunitySpec&) const = default;
};

struct FileSpec {
  std::string path;
  bool largest_component = true;
  bool operator==(const FileSpec&) const = default;
};

// Tagged description of a network source. realize() turns it into a Graph;
// file sources ignore the seed.
struct GraphSpec {
  std::variant<ErSpec, SfSpec, TwoCommunitySpec, FileSpec> source;

  static GraphSpec er(std::size_t n, double p) { return {ErSpec{n, p}}; }
  static GraphSpec sf(std::size_t n, double gamma, int k_min) { return {SfSpec{n, gamma, k_min}}; }
  static GraphSpec two_community(std::size_t n, double p_in, double p_out) {
    return {TwoCommunitySpec{n, p_in, p_out}};
  }
  static GraphSpec file(std::string path, bool largest_component = true) {
    return {FileSpec{std::move(path), largest_component}};
  }

  bool is_file() const { return std::holds_alternative<FileSpec>(source); }

  // Short parameter echo, e.g. "er(n=1000,p=0.015)". Used in manifests.
  std::string describe() const;

  bool operator==(const GraphSpec&) const = default;
};

// Throws std::invalid_argument when parameters are out of range
// (n < 1, probabilities outside [0,1], gamma <= 1, k_min outside [1, n-1]).
void validate(const GraphSpec& spec);

Graph realize(const GraphSpec& spec, std::uint64_t seed);

}  // namespace netcolor
