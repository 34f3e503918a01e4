#include "aspl/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace aspl {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("shortest-path count overflow");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("shortest-path count overflow");
  return out;
}

void require_pairs(std::size_t n) {
  if (n < 2) throw std::invalid_argument("metric requires at least two vertices");
}

void check_vertex(const DistanceMatrix& d, Vertex v) {
  if (v >= d.n()) throw GraphError("invalid vertex " + std::to_string(v));
}

std::uint64_t distance_sum(const DistanceMatrix& d, Vertex v) {
  std::uint64_t sum = 0;
  for (Vertex t = 0; t < d.n(); ++t) sum += d.dist(v, t);
  return sum;
}

Rational ratio(std::uint64_t num, std::uint64_t den) { return Rational::fraction(num, den); }

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::uint32_t> dist, std::vector<std::uint64_t> sigma)
    : n_(n), dist_(std::move(dist)), sigma_(std::move(sigma)) {
  if (dist_.size() != n * n || sigma_.size() != n * n) {
    throw std::invalid_argument("DistanceMatrix: storage size does not match n");
  }
}

DistanceMatrix apsp(const Graph& g) {
  const std::size_t n = g.n();
  if (!g.connected()) throw DisconnectedGraphError("graph is not connected");
  std::vector<std::uint32_t> dist(n * n, kUnreached);
  std::vector<std::uint64_t> sigma(n * n, 0);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::uint32_t* ds = dist.data() + s * n;
    std::uint64_t* ss = sigma.data() + s * n;
    ds[s] = 0;
    ss[s] = 1;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (ds[w] == kUnreached) {
          ds[w] = ds[u] + 1;
          queue[tail++] = w;
        }
        if (ds[w] == ds[u] + 1) ss[w] = checked_add(ss[w], ss[u]);
      }
    }
  }
  return DistanceMatrix(n, std::move(dist), std::move(sigma));
}

std::uint32_t diameter(const DistanceMatrix& d) {
  std::uint32_t out = 0;
  for (Vertex s = 0; s < d.n(); ++s) {
    for (Vertex t = 0; t < d.n(); ++t) out = std::max(out, d.dist(s, t));
  }
  return out;
}

Rational avg_path_length(const DistanceMatrix& d) {
  require_pairs(d.n());
  std::uint64_t total = 0;
  for (Vertex s = 0; s < d.n(); ++s) total += distance_sum(d, s);
  return ratio(total, d.n() * (d.n() - 1));
}

Rational restricted_avg_path_length(const SubgraphView& view, const DistanceMatrix& d) {
  if (view.host().n() != d.n()) throw std::invalid_argument("distance matrix does not belong to the view's host");
  const auto members = view.members();
  const std::size_t k = members.size();
  if (k <= 1) return Rational(0);
  std::uint64_t total = 0;
  for (Vertex s : members) {
    for (Vertex t : members) total += d.dist(s, t);
  }
  return ratio(total, k * (k - 1));
}

namespace {

std::size_t neighborhood_edges(const Graph& g, Vertex i) {
  const auto nb = g.neighbors(i);
  std::size_t count = 0;
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) count += g.adjacent(nb[a], nb[b]);
  }
  return count;
}

}  // namespace

Rational local_clustering(const Graph& g, Vertex i) {
  g.check_vertex(i);
  const std::size_t deg = g.degree(i);
  if (deg <= 1) return Rational(0);
  return ratio(2 * neighborhood_edges(g, i), deg * (deg - 1));
}

Rational average_clustering(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("average clustering of an empty graph");
  Rational sum;
  for (Vertex i = 0; i < g.n(); ++i) sum += local_clustering(g, i);
  return sum / Rational(static_cast<std::int64_t>(g.n()));
}

Rational global_clustering(const Graph& g) {
  std::uint64_t closed = 0;
  std::uint64_t triplets = 0;
  for (Vertex i = 0; i < g.n(); ++i) {
    const std::size_t deg = g.degree(i);
    closed += 2 * neighborhood_edges(g, i);
    triplets += deg * (deg > 0 ? deg - 1 : 0);
  }
  if (triplets == 0) throw std::domain_error("global clustering undefined: no vertex has degree >= 2");
  return ratio(closed, triplets);
}

Rational closeness(const DistanceMatrix& d, Vertex v) {
  check_vertex(d, v);
  require_pairs(d.n());
  return ratio(d.n() - 1, distance_sum(d, v));
}

Rational radiality(const DistanceMatrix& d, std::uint32_t diam, Vertex v) {
  check_vertex(d, v);
  require_pairs(d.n());
  std::uint64_t sum = 0;
  for (Vertex t = 0; t < d.n(); ++t) {
    if (t != v) sum += static_cast<std::uint64_t>(diam) + 1 - d.dist(v, t);
  }
  return ratio(sum, d.n() - 1);
}

std::uint64_t stress(const DistanceMatrix& d, Vertex i) {
  check_vertex(d, i);
  std::uint64_t total = 0;
  for (Vertex s = 0; s < d.n(); ++s) {
    if (s == i) continue;
    const std::uint32_t dsi = d.dist(s, i);
    for (Vertex t = 0; t < d.n(); ++t) {
      if (t == i || t == s) continue;
      if (dsi + d.dist(i, t) == d.dist(s, t)) {
        total = checked_add(total, checked_mul(d.sigma(s, i), d.sigma(i, t)));
      }
    }
  }
  return total;
}

bool is_geodetic(const DistanceMatrix& d) {
  for (Vertex s = 0; s < d.n(); ++s) {
    for (Vertex t = 0; t < d.n(); ++t) {
      if (d.sigma(s, t) != 1) return false;
    }
  }
  return true;
}

bool is_even_cycle_free(const Graph& g) {
  // Iterative Hopcroft-Tarjan block decomposition with an edge stack. Each
  // popped block is checked to be an edge (|E| = 1) or an odd cycle
  // (|E| = |V|, |V| odd; a biconnected block with |E| = |V| is a cycle).
  const std::size_t n = g.n();
  std::vector<std::uint32_t> disc(n, 0);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::uint32_t> block_mark(n, 0);
  std::uint32_t block_id = 0;
  std::uint32_t timer = 0;

  auto block_ok = [&](Edge split) {
    ++block_id;
    std::size_t edges = 0;
    std::size_t vertices = 0;
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      ++edges;
      for (Vertex x : {e.first, e.second}) {
        if (block_mark[x] != block_id) {
          block_mark[x] = block_id;
          ++vertices;
        }
      }
      if (e == split) break;
    }
    return edges == 1 || (edges == vertices && vertices % 2 == 1);
  };

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next++];
        if (disc[w] == 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = ++timer;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex parent = f.parent;
      stack.pop_back();
      if (stack.empty()) break;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent] && !block_ok(Edge{parent, v})) return false;
    }
  }
  return true;
}

bool has_complete_neighborhood(const Graph& g, Vertex i) {
  g.check_vertex(i);
  return neighborhood_edges(g, i) == pair_count(g.degree(i));
}

std::size_t CentralityProfile::pendant_count() const {
  return static_cast<std::size_t>(std::count(pendant.begin(), pendant.end(), true));
}

std::uint64_t CentralityProfile::total_stress() const {
  std::uint64_t sum = 0;
  for (auto s : stress) sum = checked_add(sum, s);
  return sum;
}

CentralityProfile profile(const Graph& g, const DistanceMatrix& d) {
  const std::size_t n = g.n();
  require_pairs(n);
  if (d.n() != n) throw std::invalid_argument("distance matrix does not match graph");
  CentralityProfile p;
  p.n = n;
  p.m = g.m();
  p.diameter = diameter(d);
  p.avg_path_length = avg_path_length(d);
  Rational clustering_sum;
  std::uint64_t closed = 0;
  std::uint64_t triplets = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t deg = g.degree(v);
    const std::size_t nb_edges = neighborhood_edges(g, v);
    p.degree.push_back(deg);
    p.local_clustering.push_back(deg <= 1 ? Rational(0) : ratio(2 * nb_edges, deg * (deg - 1)));
    clustering_sum += p.local_clustering.back();
    closed += 2 * nb_edges;
    triplets += deg * (deg > 0 ? deg - 1 : 0);
    p.closeness.push_back(closeness(d, v));
    p.radiality.push_back(radiality(d, p.diameter, v));
    p.stress.push_back(stress(d, v));
    p.pendant.push_back(deg == 1);
    p.complete_neighborhood.push_back(nb_edges == pair_count(deg));
  }
  p.average_clustering = clustering_sum / Rational(static_cast<std::int64_t>(n));
  if (triplets > 0) p.global_clustering = ratio(closed, triplets);
  p.geodetic = is_geodetic(d);
  p.even_cycle_free = is_even_cycle_free(g);
  return p;
}

CentralityProfile profile(const Graph& g) { return profile(g, apsp(g)); }

}  // namespace aspl
