#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "aspl/graph.hpp"
#include "aspl/rational.hpp"

namespace aspl {

// All-pairs hop distances and shortest-path counts of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> dist, std::vector<std::uint64_t> sigma);

  std::size_t n() const { return n_; }
  std::uint32_t dist(Vertex s, Vertex t) const { return dist_[s * n_ + t]; }
  // Number of distinct shortest s-t paths; sigma(s, s) = 1.
  std::uint64_t sigma(Vertex s, Vertex t) const { return sigma_[s * n_ + t]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint64_t> sigma_;
};

// One BFS per source with path counting. Throws DisconnectedGraphError, and
// std::overflow_error if a path count exceeds 64 bits.
DistanceMatrix apsp(const Graph& g);

std::uint32_t diameter(const DistanceMatrix& d);

// Mean over ordered pairs of distinct vertices. Requires n >= 2.
Rational avg_path_length(const DistanceMatrix& d);

// Mean of host distances over ordered pairs of distinct members; 0 for views
// with fewer than two members. `d` must be the host's matrix.
Rational restricted_avg_path_length(const SubgraphView& view, const DistanceMatrix& d);

// 2|E(N(i))| / (d_i (d_i - 1)), and 0 when d_i <= 1.
Rational local_clustering(const Graph& g, Vertex i);
Rational average_clustering(const Graph& g);
// Closed triplets over all triplets. Throws std::domain_error if no vertex has
// degree >= 2.
Rational global_clustering(const Graph& g);

Rational closeness(const DistanceMatrix& d, Vertex v);
Rational radiality(const DistanceMatrix& d, std::uint32_t diam, Vertex v);

// Shortest paths over ordered endpoint pairs (s, t) that pass through i as an
// interior vertex.
std::uint64_t stress(const DistanceMatrix& d, Vertex i);

bool is_geodetic(const DistanceMatrix& d);

// True iff every biconnected block is a single edge or an odd cycle.
bool is_even_cycle_free(const Graph& g);

// True iff N(i) induces a complete graph (vacuously for d_i <= 1).
bool has_complete_neighborhood(const Graph& g, Vertex i);

struct CentralityProfile {
  std::size_t n = 0;
  std::size_t m = 0;

  std::vector<std::size_t> degree;
  std::vector<Rational> local_clustering;
  std::vector<Rational> closeness;
  std::vector<Rational> radiality;
  std::vector<std::uint64_t> stress;
  std::vector<bool> pendant;
  std::vector<bool> complete_neighborhood;

  std::uint32_t diameter = 0;
  Rational avg_path_length;
  Rational average_clustering;
  std::optional<Rational> global_clustering;  // undefined when max degree < 2
  bool geodetic = false;
  bool even_cycle_free = false;

  std::size_t pendant_count() const;
  std::uint64_t total_stress() const;
};

// Requires a connected graph with n >= 2.
CentralityProfile profile(const Graph& g, const DistanceMatrix& d);
CentralityProfile profile(const Graph& g);

}  // namespace aspl
