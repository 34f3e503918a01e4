#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aspl/graph.hpp"

namespace aspl {

enum class Model { kPath, kCycle, kStar, kComplete, kGnp, kWattsStrogatz };

std::string_view model_name(Model model);
std::optional<Model> parse_model(std::string_view name);

// Only the fields a model reads are consulted:
//   path, complete: n;  cycle: n (>= 3);  star: leaves;
//   gnp: n, p;  watts_strogatz: n, k (even, < n), p.
struct ModelParams {
  std::size_t n = 0;
  std::size_t leaves = 0;
  std::size_t k = 0;
  double p = 0.0;
};

// Deterministic for a fixed (model, params, seed). Throws std::invalid_argument
// on out-of-range parameters.
Graph generate(Model model, const ModelParams& params, std::uint64_t seed = 0);

// All labeled connected graphs on n vertices (1 <= n <= 8) in ascending order
// of adjacency bitmask (see Graph::from_bitmask). The mask range may be split
// into disjoint [begin, end) pieces for parallel consumers.
class ConnectedGraphStream {
 public:
  static constexpr std::size_t kMaxVertices = 8;

  explicit ConnectedGraphStream(std::size_t n);
  ConnectedGraphStream(std::size_t n, std::uint64_t begin_mask, std::uint64_t end_mask);

  // Number of masks in the full range: 2^(n(n-1)/2).
  static std::uint64_t mask_count(std::size_t n);

  struct Item {
    std::uint64_t mask;
    Graph graph;
  };
  std::optional<Item> next();

 private:
  std::size_t n_;
  std::uint64_t cursor_;
  std::uint64_t end_;
};

bool mask_connected(std::size_t n, std::uint64_t mask);

std::vector<Graph> enumerate_connected(std::size_t n);
std::uint64_t count_connected(std::size_t n);

struct SubsetSampling {
  std::size_t min_size = 2;
  std::size_t exhaustive_max_n = 10;
  std::size_t sample_count = 1000;
  std::uint64_t seed = 0;
};

// Vertex subsets of size >= min_size as views. Hosts with n <= exhaustive_max_n
// get every subset in ascending bitmask order (subsets need not induce a
// connected graph); larger hosts get sample_count seeded draws, each a uniform
// size in [min_size, n] followed by a uniform subset of that size.
std::vector<SubgraphView> induced_connected_subsets(const Graph& g, const SubsetSampling& sampling = {});

}  // namespace aspl
