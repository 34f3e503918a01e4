#include "aspl/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <stdexcept>

#include "aspl/rng.hpp"

namespace aspl {

namespace {

constexpr std::array<std::pair<Model, std::string_view>, 6> kModelNames{{
    {Model::kPath, "path"},
    {Model::kCycle, "cycle"},
    {Model::kStar, "star"},
    {Model::kComplete, "complete"},
    {Model::kGnp, "gnp"},
    {Model::kWattsStrogatz, "watts_strogatz"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_probability(double p) { require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]"); }

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph watts_strogatz(std::size_t n, std::size_t k, double p, Engine& rng) {
  require(k % 2 == 0, "watts_strogatz: k must be even");
  require(k < n, "watts_strogatz: k must be < n");
  check_probability(p);

  std::set<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (Vertex u = 0; u < n; ++u) {
      if (edges.insert(ordered(u, static_cast<Vertex>((u + j) % n))).second) {
        ++degree[u];
        ++degree[(u + j) % n];
      }
    }
  }
  if (p == 0.0) return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));

  // Each clockwise lattice edge (u, u+j) is rewired to (u, w) with probability
  // p, where w is uniform over vertices that keep the graph simple.
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (Vertex u = 0; u < n; ++u) {
      const auto v = static_cast<Vertex>((u + j) % n);
      if (uniform01(rng) >= p) continue;
      if (!edges.contains(ordered(u, v))) continue;
      if (degree[u] >= n - 1) continue;
      Vertex w;
      do {
        w = static_cast<Vertex>(uniform_below(rng, n));
      } while (w == u || edges.contains(ordered(u, w)));
      edges.erase(ordered(u, v));
      --degree[v];
      edges.insert(ordered(u, w));
      ++degree[w];
    }
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace

std::string_view model_name(Model model) {
  for (const auto& [m, name] : kModelNames) {
    if (m == model) return name;
  }
  return "unknown";
}

std::optional<Model> parse_model(std::string_view name) {
  for (const auto& [m, known] : kModelNames) {
    if (known == name) return m;
  }
  return std::nullopt;
}

Graph generate(Model model, const ModelParams& params, std::uint64_t seed) {
  Engine rng(seed);
  const std::size_t n = params.n;
  std::vector<Edge> edges;
  switch (model) {
    case Model::kPath:
      require(n >= 1, "path: n must be >= 1");
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      return Graph(n, edges);
    case Model::kCycle:
      require(n >= 3, "cycle: n must be >= 3");
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, static_cast<Vertex>(n - 1));
      return Graph(n, edges);
    case Model::kStar:
      require(params.leaves >= 1, "star: leaves must be >= 1");
      for (Vertex v = 1; v <= params.leaves; ++v) edges.emplace_back(0, v);
      return Graph(params.leaves + 1, edges);
    case Model::kComplete:
      require(n >= 1, "complete: n must be >= 1");
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      return Graph(n, edges);
    case Model::kGnp:
      require(n >= 1, "gnp: n must be >= 1");
      check_probability(params.p);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (uniform01(rng) < params.p) edges.emplace_back(u, v);
        }
      }
      return Graph(n, edges);
    case Model::kWattsStrogatz:
      require(n >= 1, "watts_strogatz: n must be >= 1");
      return watts_strogatz(n, params.k, params.p, rng);
  }
  throw std::invalid_argument("unknown model");
}

std::uint64_t ConnectedGraphStream::mask_count(std::size_t n) { return std::uint64_t{1} << pair_count(n); }

ConnectedGraphStream::ConnectedGraphStream(std::size_t n) : ConnectedGraphStream(n, 0, 0) {
  end_ = (n >= 1 && n <= kMaxVertices) ? mask_count(n) : 0;
}

ConnectedGraphStream::ConnectedGraphStream(std::size_t n, std::uint64_t begin_mask, std::uint64_t end_mask)
    : n_(n), cursor_(begin_mask), end_(end_mask) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("enumeration supports 1 <= n <= " + std::to_string(kMaxVertices));
  }
  end_ = std::min(end_, mask_count(n));
}

std::optional<ConnectedGraphStream::Item> ConnectedGraphStream::next() {
  while (cursor_ < end_) {
    const std::uint64_t mask = cursor_++;
    if (mask_connected(n_, mask)) return Item{mask, Graph::from_bitmask(n_, mask)};
  }
  return std::nullopt;
}

bool mask_connected(std::size_t n, std::uint64_t mask) {
  if (n == 0) return false;
  std::array<std::uint32_t, 32> rows{};
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) {
        rows[u] |= 1U << v;
        rows[v] |= 1U << u;
      }
    }
  }
  std::uint32_t reached = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t grown = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) grown |= rows[std::countr_zero(f)];
    frontier = grown & ~reached;
    reached |= grown;
  }
  return reached == ((n == 32) ? ~0U : ((1U << n) - 1));
}

std::vector<Graph> enumerate_connected(std::size_t n) {
  std::vector<Graph> out;
  ConnectedGraphStream stream(n);
  while (auto item = stream.next()) out.push_back(std::move(item->graph));
  return out;
}

std::uint64_t count_connected(std::size_t n) {
  if (n < 1 || n > ConnectedGraphStream::kMaxVertices) {
    throw std::invalid_argument("enumeration supports 1 <= n <= 8");
  }
  std::uint64_t count = 0;
  const std::uint64_t total = ConnectedGraphStream::mask_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) count += mask_connected(n, mask);
  return count;
}

std::vector<SubgraphView> induced_connected_subsets(const Graph& g, const SubsetSampling& sampling) {
  if (sampling.min_size < 2) throw std::invalid_argument("induced subsets: min_size must be >= 2");
  if (!g.connected()) throw DisconnectedGraphError("induced subsets: host graph must be connected");
  const std::size_t n = g.n();
  std::vector<SubgraphView> out;
  if (sampling.min_size > n) return out;

  if (n <= sampling.exhaustive_max_n && n < 64) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) < sampling.min_size) continue;
      std::vector<Vertex> members;
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        members.push_back(static_cast<Vertex>(std::countr_zero(bits)));
      }
      out.emplace_back(g, std::move(members));
    }
    return out;
  }

  Engine rng(sampling.seed);
  std::vector<Vertex> pool(n);
  out.reserve(sampling.sample_count);
  for (std::size_t s = 0; s < sampling.sample_count; ++s) {
    const std::size_t size = sampling.min_size + uniform_below(rng, n - sampling.min_size + 1);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t j = i + uniform_below(rng, n - i);
      std::swap(pool[i], pool[j]);
    }
    std::vector<Vertex> members(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(members.begin(), members.end());
    out.emplace_back(g, std::move(members));
  }
  return out;
}

}  // namespace aspl
