#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "aspl/graph.hpp"

namespace aspl::oracle {

// Union-find connectivity over an explicit edge list.
inline bool connected(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t components = n;
  for (const auto& [u, v] : edges) {
    const auto a = find(u);
    const auto b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

inline std::vector<Edge> edges_of_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return edges;
}

inline std::uint64_t count_connected_brute(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    count += connected(n, edges_of_mask(n, mask));
  }
  return count;
}

// Every simple s-t path, as vertex sequences.
inline void simple_paths(const Graph& g, Vertex s, Vertex t, const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> path{s};
  std::vector<bool> used(g.n(), false);
  used[s] = true;
  std::function<void(Vertex)> dfs = [&](Vertex u) {
    if (u == t) {
      fn(path);
      return;
    }
    for (Vertex w = 0; w < g.n(); ++w) {
      if (!used[w] && g.adjacent(u, w)) {
        used[w] = true;
        path.push_back(w);
        dfs(w);
        path.pop_back();
        used[w] = false;
      }
    }
  };
  dfs(s);
}

struct PathCensus {
  std::size_t n;
  std::vector<std::size_t> dist;      // n*n, SIZE_MAX when unreachable
  std::vector<std::uint64_t> sigma;   // n*n
  std::vector<std::uint64_t> stress;  // n, ordered pairs, interior vertices only
};

// Distances, shortest-path counts and stress from explicit enumeration of all
// simple paths between every ordered pair.
inline PathCensus enumerate_shortest_paths(const Graph& g) {
  const std::size_t n = g.n();
  PathCensus c{n, std::vector<std::size_t>(n * n, SIZE_MAX), std::vector<std::uint64_t>(n * n, 0),
               std::vector<std::uint64_t>(n, 0)};
  for (Vertex s = 0; s < n; ++s) {
    c.dist[s * n + s] = 0;
    c.sigma[s * n + s] = 1;
    for (Vertex t = 0; t < n; ++t) {
      if (s == t) continue;
      std::vector<std::vector<Vertex>> shortest;
      simple_paths(g, s, t, [&](const std::vector<Vertex>& p) {
        const std::size_t len = p.size() - 1;
        if (len < c.dist[s * n + t]) {
          c.dist[s * n + t] = len;
          shortest.clear();
        }
        if (len == c.dist[s * n + t]) shortest.push_back(p);
      });
      c.sigma[s * n + t] = shortest.size();
      for (const auto& p : shortest) {
        for (std::size_t k = 1; k + 1 < p.size(); ++k) ++c.stress[p[k]];
      }
    }
  }
  return c;
}

// True iff some simple cycle has even length, found by explicit DFS over
// cycles rooted at their smallest vertex.
inline bool has_even_cycle_brute(const Graph& g) {
  const std::size_t n = g.n();
  bool found = false;
  for (Vertex root = 0; root < n && !found; ++root) {
    std::vector<bool> used(n, false);
    used[root] = true;
    std::function<void(Vertex, std::size_t)> dfs = [&](Vertex u, std::size_t len) {
      if (found) return;
      for (Vertex w = root; w < n; ++w) {
        if (!g.adjacent(u, w)) continue;
        if (w == root && len >= 3 && (len % 2 == 0)) {
          found = true;
          return;
        }
        if (w > root && !used[w]) {
          used[w] = true;
          dfs(w, len + 1);
          used[w] = false;
        }
      }
    };
    // len counts vertices on the current path; closing edge makes it a cycle
    // of `len` edges.
    dfs(root, 1);
  }
  return found;
}

}  // namespace aspl::oracle
