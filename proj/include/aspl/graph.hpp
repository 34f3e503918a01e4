#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aspl {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Thrown for structurally invalid graphs: self-loops, duplicate edges,
// out-of-range vertex ids.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  // Upper-triangle row-major bit assignment: bit 0 = (0,1), bit 1 = (0,2), ...,
  // bit n-2 = (0,n-1), bit n-1 = (1,2), ...
  static Graph from_bitmask(std::size_t n, std::uint64_t mask);

  std::size_t n() const { return adjacency_.size(); }
  std::size_t m() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  // Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool connected() const;
  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  void add_edge(Vertex u, Vertex v);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t m_ = 0;
};

std::size_t pair_count(std::size_t n);

// Edge-list text: optional "n <count>" header, one "u v" per line, '#'
// comments, blank lines ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Canonical form: sorted edges, one per line, each terminated by '\n'. A
// header is written only when the vertex count is not implied by the edges.
std::string serialize_edge_list(const Graph& g);

std::vector<Vertex> pendant_vertices(const Graph& g);

// Induced subgraph on `members` of a host graph. Stores a pointer to the host,
// which must outlive the view.
class SubgraphView {
 public:
  SubgraphView(const Graph& host, std::vector<Vertex> members);

  const Graph& host() const { return *host_; }
  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Vertex v) const;

  // Host edges with both endpoints in the view, as host ids (u < v), sorted.
  std::vector<Edge> induced_edges() const;
  std::size_t induced_edge_count() const;

  // The view as a standalone graph; member k becomes vertex k.
  Graph induced_graph() const;

 private:
  const Graph* host_;
  std::vector<Vertex> members_;
  std::vector<unsigned char> in_view_;
};

// Open N(v) (neighbors) or closed N'(v) (neighbors plus v); members ascending.
SubgraphView neighborhood(const Graph& g, Vertex v, bool closed);

}  // namespace aspl
