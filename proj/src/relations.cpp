#include "aspl/relations.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace aspl {

namespace {

using Kind = RelationKind;
using Scope = RelationScope;
using Form = RelationForm;

const std::vector<RelationSpec>& build_catalog() {
  static const std::vector<RelationSpec> specs{
      {RelationId::R1, "L(N(i)) = 2 - c_i", {"degree>=2"}, Kind::kExactIdentity, Scope::kPerVertex, Form::kEqual},
      {RelationId::R2, "C_WS = 2 - (1/n) sum_i L(N(i))", {"min_degree>=2"}, Kind::kExactIdentity,
       Scope::kPerGraph, Form::kEqual},
      {RelationId::R3, "L(N'(i)) = ((d_i - 1) L(N(i)) + 2) / (d_i + 1)", {"degree>=1"}, Kind::kExactIdentity,
       Scope::kPerVertex, Form::kEqual},
      {RelationId::R4, "L(G) >= ((n-1)/n) L(G - v), ambient distances", {}, Kind::kInequality, Scope::kPerVertex,
       Form::kAtLeast},
      {RelationId::R5, "L(N'(i)) >= (d_i / (d_i + 1)) L(N(i))", {"degree>=1"}, Kind::kInequality,
       Scope::kPerVertex, Form::kAtLeast},
      {RelationId::R6, "L(G) >= (|S| / n) L(S), ambient distances", {}, Kind::kInequality, Scope::kPerSubgraph,
       Form::kAtLeast},
      {RelationId::R7, "L >= n / sum_v Clo(v)", {}, Kind::kInequality, Scope::kPerGraph, Form::kAtLeast},
      {RelationId::R8, "L = diam + 1 - (1/n) sum_v Rad(v)", {}, Kind::kExactIdentity, Scope::kPerGraph,
       Form::kEqual},
      {RelationId::R9,
       "C_WS/2 >= (1/n) sum_i [(1/d_i) sum_{v in N(i)} Rad_{N'(i)}(v)] - 2 + #complete(N(i))/n",
       {"min_degree>=1"}, Kind::kAuditInequality, Scope::kPerGraph, Form::kAtLeast},
      {RelationId::R10, "L = 1 + sum_i Str(i) / (n(n-1))", {"geodetic"}, Kind::kExactIdentity, Scope::kPerGraph,
       Form::kEqual},
      {RelationId::R10b, "L <= 1 + sum_i Str(i) / (n(n-1))", {}, Kind::kInequality, Scope::kPerGraph,
       Form::kAtMost},
      {RelationId::R11, "C_WS >= 1 - (1/n) sum_i Str(i) / (d_i(d_i-1))", {"no_pendant"}, Kind::kInequality,
       Scope::kPerGraph, Form::kAtLeast},
      {RelationId::R11b, "C_WS >= 1 - (1/n) sum'_i Str(i) / (d_i(d_i-1)) - #pendant/n", {}, Kind::kInequality,
       Scope::kPerGraph, Form::kAtLeast},
      {RelationId::R12, "1 - C_WS <= (1/n) sum'_i (L-1)(n-1) / (d_i(d_i-1)) + #pendant/n",
       {"geodetic", "monotone_coupling"}, Kind::kAuditInequality, Scope::kPerGraph, Form::kAtMost},
  };
  return specs;
}

constexpr std::array<std::pair<RelationId, std::string_view>, 14> kNames{{
    {RelationId::R1, "R1"},   {RelationId::R2, "R2"},     {RelationId::R3, "R3"},   {RelationId::R4, "R4"},
    {RelationId::R5, "R5"},   {RelationId::R6, "R6"},     {RelationId::R7, "R7"},   {RelationId::R8, "R8"},
    {RelationId::R9, "R9"},   {RelationId::R10, "R10"},   {RelationId::R10b, "R10b"}, {RelationId::R11, "R11"},
    {RelationId::R11b, "R11b"}, {RelationId::R12, "R12"},
}};

Rational whole(std::size_t x) { return Rational(static_cast<std::int64_t>(x)); }

RelationResult classify(const RelationSpec& spec, Subject subject, bool preconditions_hold, Rational lhs,
                        Rational rhs) {
  RelationResult r{spec.id, std::move(subject), Status::kHolds, std::move(lhs), std::move(rhs), Rational(0)};
  switch (spec.form) {
    case Form::kEqual: {
      Rational diff = r.lhs - r.rhs;
      r.slack = diff.sign() > 0 ? -diff : diff;
      break;
    }
    case Form::kAtLeast:
      r.slack = r.lhs - r.rhs;
      break;
    case Form::kAtMost:
      r.slack = r.rhs - r.lhs;
      break;
  }
  if (!preconditions_hold) {
    r.status = Status::kSkippedPrecondition;
  } else if (r.slack.is_zero()) {
    r.status = Status::kEquality;
  } else {
    r.status = r.slack.sign() > 0 ? Status::kHolds : Status::kViolated;
  }
  return r;
}

void require_vertex(const Graph& g, const Subject& s) {
  if (s.kind != Subject::Kind::kVertex) throw std::invalid_argument("relation expects a vertex subject");
  g.check_vertex(s.vertex);
}

bool scope_matches(RelationScope scope, const Subject& subject) {
  return (scope == Scope::kPerGraph && subject.kind == Subject::Kind::kGraph) ||
         (scope == Scope::kPerVertex && subject.kind == Subject::Kind::kVertex) ||
         (scope == Scope::kPerSubgraph && subject.kind == Subject::Kind::kSubset);
}

}  // namespace

RelationEvaluator::RelationEvaluator(const Graph& g, const CentralityProfile& p, const DistanceMatrix& d)
    : g_(g), p_(p), d_(d) {
  if (!g.connected()) throw DisconnectedGraphError("relation evaluation requires a connected graph");
  if (g.n() < 2) throw std::invalid_argument("relation evaluation requires n >= 2");
  if (p.n != g.n() || d.n() != g.n()) throw std::invalid_argument("profile or distances do not match graph");
  open_l_.reserve(g.n());
  closed_l_.reserve(g.n());
  for (Vertex i = 0; i < g.n(); ++i) {
    open_l_.push_back(restricted_avg_path_length(neighborhood(g, i, false), d));
    closed_l_.push_back(restricted_avg_path_length(neighborhood(g, i, true), d));
  }
}

RelationResult RelationEvaluator::eval(const RelationSpec& spec, const Subject& s) const {
  const std::size_t n = g_.n();
  const Rational nn = whole(n);
  const auto& p = p_;
  const auto degree = [&](Vertex i) { return p_.degree[i]; };
  const auto min_degree = [&] { return *std::min_element(p_.degree.begin(), p_.degree.end()); };
  switch (spec.id) {
    case RelationId::R1: {
      require_vertex(g_, s);
      const Vertex i = s.vertex;
      return classify(spec, s, degree(i) >= 2, open_l_[i], Rational(2) - p.local_clustering[i]);
    }
    case RelationId::R2: {
      Rational sum;
      for (const auto& l : open_l_) sum += l;
      return classify(spec, s, min_degree() >= 2, p.average_clustering, Rational(2) - sum / nn);
    }
    case RelationId::R3: {
      require_vertex(g_, s);
      const Vertex i = s.vertex;
      const std::size_t deg = degree(i);
      const Rational rhs = deg == 0 ? Rational(0)
                                    : (whole(deg - 1) * open_l_[i] + Rational(2)) / whole(deg + 1);
      return classify(spec, s, deg >= 1, closed_l_[i], rhs);
    }
    case RelationId::R4: {
      require_vertex(g_, s);
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < n; ++v) {
        if (v != s.vertex) rest.push_back(v);
      }
      const Rational remaining = restricted_avg_path_length(SubgraphView(g_, std::move(rest)), d_);
      return classify(spec, s, true, p.avg_path_length, Rational::fraction(n - 1, n) * remaining);
    }
    case RelationId::R5: {
      require_vertex(g_, s);
      const Vertex i = s.vertex;
      const std::size_t deg = degree(i);
      return classify(spec, s, deg >= 1, closed_l_[i], Rational::fraction(deg, deg + 1) * open_l_[i]);
    }
    case RelationId::R6: {
      if (s.kind != Subject::Kind::kSubset) throw std::invalid_argument("R6 expects a subset subject");
      const SubgraphView view(g_, s.members);
      const Rational rhs = Rational::fraction(view.size(), n) * restricted_avg_path_length(view, d_);
      return classify(spec, s, true, p.avg_path_length, rhs);
    }
    case RelationId::R7: {
      Rational sum;
      for (const auto& clo : p.closeness) sum += clo;
      return classify(spec, s, true, p.avg_path_length, nn / sum);
    }
    case RelationId::R8: {
      Rational sum;
      for (const auto& rad : p.radiality) sum += rad;
      return classify(spec, s, true, p.avg_path_length, whole(p.diameter) + Rational(1) - sum / nn);
    }
    case RelationId::R9: {
      Rational sum;
      std::size_t complete = 0;
      for (Vertex i = 0; i < n; ++i) {
        sum += restricted_radiality_sum(g_, i);
        complete += p.complete_neighborhood[i];
      }
      const Rational rhs = sum / nn - Rational(2) + whole(complete) / nn;
      return classify(spec, s, min_degree() >= 1, p.average_clustering / Rational(2), rhs);
    }
    case RelationId::R10:
    case RelationId::R10b: {
      const Rational rhs = Rational(1) + Rational::fraction(p.total_stress(), n * (n - 1));
      return classify(spec, s, spec.id == RelationId::R10b || p.geodetic, p.avg_path_length, rhs);
    }
    case RelationId::R11:
    case RelationId::R11b: {
      Rational sum;
      for (Vertex i = 0; i < n; ++i) {
        const std::size_t deg = degree(i);
        if (deg >= 2) {
          sum += Rational::fraction(p.stress[i], deg * (deg - 1));
        }
      }
      const std::size_t pendants = p.pendant_count();
      Rational rhs = Rational(1) - sum / nn;
      if (spec.id == RelationId::R11b) rhs -= whole(pendants) / nn;
      return classify(spec, s, spec.id == RelationId::R11b || pendants == 0, p.average_clustering, rhs);
    }
    case RelationId::R12: {
      const Rational scale = (p.avg_path_length - Rational(1)) * whole(n - 1);
      Rational sum;
      for (Vertex i = 0; i < n; ++i) {
        const std::size_t deg = degree(i);
        if (deg >= 2) sum += scale / whole(deg * (deg - 1));
      }
      const Rational rhs = sum / nn + whole(p.pendant_count()) / nn;
      return classify(spec, s, p.geodetic && monotone_coupling(p), Rational(1) - p.average_clustering, rhs);
    }
  }
  throw std::logic_error("unhandled relation");
}

std::vector<RelationResult> RelationEvaluator::evaluate(const RelationSpec& spec,
                                                        const EvaluationOptions& options) const {
  std::vector<RelationResult> out;
  switch (spec.scope) {
    case Scope::kPerGraph:
      out.push_back(eval(spec, Subject::graph()));
      break;
    case Scope::kPerVertex:
      for (Vertex v = 0; v < g_.n(); ++v) out.push_back(eval(spec, Subject::at_vertex(v)));
      break;
    case Scope::kPerSubgraph:
      for (const auto& view : induced_connected_subsets(g_, options.subsets)) {
        out.push_back(eval(spec, Subject::subset({view.members().begin(), view.members().end()})));
      }
      break;
  }
  return out;
}

RelationResult RelationEvaluator::evaluate_subject(const RelationSpec& spec, const Subject& subject) const {
  if (!scope_matches(spec.scope, subject)) throw std::invalid_argument("subject kind does not match relation scope");
  return eval(spec, subject);
}

std::string_view relation_name(RelationId id) {
  for (const auto& [rid, name] : kNames) {
    if (rid == id) return name;
  }
  return "?";
}

std::optional<RelationId> parse_relation(std::string_view name) {
  for (const auto& [rid, known] : kNames) {
    if (known == name) return rid;
  }
  return std::nullopt;
}

std::string_view kind_name(RelationKind kind) {
  switch (kind) {
    case Kind::kExactIdentity: return "exact-identity";
    case Kind::kInequality: return "inequality";
    case Kind::kAuditInequality: return "audit-inequality";
  }
  return "?";
}

std::string_view scope_name(RelationScope scope) {
  switch (scope) {
    case Scope::kPerVertex: return "per-vertex";
    case Scope::kPerGraph: return "per-graph";
    case Scope::kPerSubgraph: return "per-subgraph";
  }
  return "?";
}

std::string_view status_name(Status status) {
  switch (status) {
    case Status::kHolds: return "holds";
    case Status::kEquality: return "equality";
    case Status::kViolated: return "violated";
    case Status::kSkippedPrecondition: return "skipped-precondition";
  }
  return "?";
}

const std::vector<RelationSpec>& catalog() { return build_catalog(); }

const RelationSpec& relation_spec(RelationId id) {
  for (const auto& spec : catalog()) {
    if (spec.id == id) return spec;
  }
  throw std::invalid_argument("unknown relation");
}

std::vector<RelationResult> evaluate(const RelationSpec& spec, const Graph& g, const CentralityProfile& p,
                                     const DistanceMatrix& d, const EvaluationOptions& options) {
  return RelationEvaluator(g, p, d).evaluate(spec, options);
}

RelationResult evaluate_subject(const RelationSpec& spec, const Graph& g, const CentralityProfile& p,
                                const DistanceMatrix& d, const Subject& subject) {
  return RelationEvaluator(g, p, d).evaluate_subject(spec, subject);
}

Rational restricted_radiality_sum(const Graph& g, Vertex i) {
  g.check_vertex(i);
  const std::size_t deg = g.degree(i);
  if (deg == 0) throw std::invalid_argument("restricted radiality needs a vertex of degree >= 1");
  const SubgraphView closed = neighborhood(g, i, true);
  const Graph local = closed.induced_graph();
  const DistanceMatrix ld = apsp(local);
  const std::uint32_t local_diam = diameter(ld);
  const auto members = closed.members();
  Rational sum;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k] != i) sum += radiality(ld, local_diam, static_cast<Vertex>(k));
  }
  return sum / whole(deg);
}

bool monotone_coupling(const CentralityProfile& p) {
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) {
      if (p.degree[i] <= p.degree[j] && p.stress[i] > p.stress[j]) return false;
    }
  }
  return true;
}

bool strict_coupling_pair(const CentralityProfile& p) {
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) {
      if (p.degree[i] < p.degree[j] && p.stress[i] < p.stress[j]) return true;
    }
  }
  return false;
}

}  // namespace aspl
