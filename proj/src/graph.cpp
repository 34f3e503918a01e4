#include "aspl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace aspl {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Graph Graph::from_bitmask(std::size_t n, std::uint64_t mask) {
  if (pair_count(n) > 64) throw GraphError("from_bitmask: too many vertices for a 64-bit mask");
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n() || v >= n()) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                     std::to_string(n()));
  }
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
  ++m_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::connected() const {
  if (n() == 0) return false;
  std::vector<unsigned char> seen(n(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n();
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n()) throw GraphError("invalid vertex " + std::to_string(v) + " for n=" + std::to_string(n()));
}

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool parse_id(std::string_view token, std::uint64_t& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  constexpr std::uint64_t kMaxVertices = 1U << 20;
  std::vector<std::pair<Edge, std::size_t>> edges;  // edge and its line
  bool have_header = false;
  bool seen_content = false;
  std::uint64_t declared = 0;
  std::uint64_t max_id_plus_one = 0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body(line);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    const auto tokens = split_ws(body);
    if (tokens.empty()) continue;

    if (tokens[0] == "n") {
      if (seen_content) throw ParseError(lineno, "header must precede all edges");
      if (tokens.size() != 2 || !parse_id(tokens[1], declared) || declared > kMaxVertices) {
        throw ParseError(lineno, "malformed header, expected 'n <count>'");
      }
      have_header = true;
      seen_content = true;
      continue;
    }
    seen_content = true;

    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (tokens.size() != 2 || !parse_id(tokens[0], u) || !parse_id(tokens[1], v)) {
      throw ParseError(lineno, "malformed edge line, expected 'u v'");
    }
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    if (u >= kMaxVertices || v >= kMaxVertices) throw ParseError(lineno, "vertex id too large");
    if (have_header && (u >= declared || v >= declared)) {
      throw ParseError(lineno, "vertex id exceeds declared count " + std::to_string(declared));
    }
    max_id_plus_one = std::max({max_id_plus_one, u + 1, v + 1});
    edges.push_back({{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))}, lineno});
  }

  const std::size_t n = have_header ? declared : max_id_plus_one;
  // Detect duplicates here to report the offending line.
  std::vector<std::pair<Edge, std::size_t>> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      const auto [u, v] = sorted[i].first;
      throw ParseError(std::max(sorted[i].second, sorted[i - 1].second),
                       "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& e : edges) plain.push_back(e.first);
  return Graph(n, plain);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::size_t implied = 0;
  for (const auto& [u, v] : edges) implied = std::max<std::size_t>(implied, v + 1);
  std::ostringstream out;
  if (implied != g.n()) out << "n " << g.n() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

SubgraphView::SubgraphView(const Graph& host, std::vector<Vertex> members)
    : host_(&host), members_(std::move(members)), in_view_(host.n(), 0) {
  for (Vertex v : members_) {
    host.check_vertex(v);
    if (in_view_[v]) throw GraphError("duplicate view member " + std::to_string(v));
    in_view_[v] = 1;
  }
}

bool SubgraphView::contains(Vertex v) const { return v < in_view_.size() && in_view_[v] != 0; }

std::vector<Edge> SubgraphView::induced_edges() const {
  std::vector<Edge> out;
  for (Vertex u : members_) {
    for (Vertex w : host_->neighbors(u)) {
      if (u < w && in_view_[w]) out.emplace_back(u, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SubgraphView::induced_edge_count() const {
  std::size_t twice = 0;
  for (Vertex u : members_) {
    for (Vertex w : host_->neighbors(u)) twice += in_view_[w];
  }
  return twice / 2;
}

Graph SubgraphView::induced_graph() const {
  std::vector<Vertex> local(host_->n(), 0);
  for (std::size_t k = 0; k < members_.size(); ++k) local[members_[k]] = static_cast<Vertex>(k);
  std::vector<Edge> edges;
  for (const auto& [u, v] : induced_edges()) edges.emplace_back(local[u], local[v]);
  return Graph(members_.size(), edges);
}

SubgraphView neighborhood(const Graph& g, Vertex v, bool closed) {
  g.check_vertex(v);
  std::vector<Vertex> members(g.neighbors(v).begin(), g.neighbors(v).end());
  if (closed) members.insert(std::lower_bound(members.begin(), members.end(), v), v);
  return SubgraphView(g, std::move(members));
}

}  // namespace aspl
