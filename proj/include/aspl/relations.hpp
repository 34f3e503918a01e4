#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aspl/generators.hpp"
#include "aspl/graph.hpp"
#include "aspl/metrics.hpp"
#include "aspl/rational.hpp"

namespace aspl {

enum class RelationId { R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R10b, R11, R11b, R12 };

std::string_view relation_name(RelationId id);
std::optional<RelationId> parse_relation(std::string_view name);

enum class RelationKind { kExactIdentity, kInequality, kAuditInequality };
enum class RelationScope { kPerVertex, kPerGraph, kPerSubgraph };
// Direction of the statement as lhs (op) rhs.
enum class RelationForm { kEqual, kAtLeast, kAtMost };

std::string_view kind_name(RelationKind kind);
std::string_view scope_name(RelationScope scope);

struct RelationSpec {
  RelationId id;
  std::string description;
  std::vector<std::string> preconditions;
  RelationKind kind;
  RelationScope scope;
  RelationForm form;

  bool audit() const { return kind == RelationKind::kAuditInequality; }
};

// The fourteen relations in fixed order R1..R9, R10, R10b, R11, R11b, R12.
const std::vector<RelationSpec>& catalog();
const RelationSpec& relation_spec(RelationId id);

enum class Status { kHolds, kEquality, kViolated, kSkippedPrecondition };
std::string_view status_name(Status status);

struct Subject {
  enum class Kind { kGraph, kVertex, kSubset };
  Kind kind = Kind::kGraph;
  Vertex vertex = 0;            // kVertex
  std::vector<Vertex> members;  // kSubset, ascending

  static Subject graph() { return {}; }
  static Subject at_vertex(Vertex v) { return {Kind::kVertex, v, {}}; }
  static Subject subset(std::vector<Vertex> members) { return {Kind::kSubset, 0, std::move(members)}; }

  friend bool operator==(const Subject&, const Subject&) = default;
};

struct RelationResult {
  RelationId id;
  Subject subject;
  Status status;
  Rational lhs;
  Rational rhs;
  // Oriented so that slack >= 0 exactly when the statement holds. Identities
  // report -|lhs - rhs|.
  Rational slack;
};

struct EvaluationOptions {
  SubsetSampling subsets{};  // subjects for R6
};

// Holds the per-graph quantities shared by all relations (neighborhood path
// lengths), so a graph can be checked against several relations cheaply.
// References must outlive the evaluator.
class RelationEvaluator {
 public:
  RelationEvaluator(const Graph& g, const CentralityProfile& p, const DistanceMatrix& d);

  std::vector<RelationResult> evaluate(const RelationSpec& spec, const EvaluationOptions& options = {}) const;
  RelationResult evaluate_subject(const RelationSpec& spec, const Subject& subject) const;

  const Graph& graph() const { return g_; }
  const CentralityProfile& profile() const { return p_; }
  const DistanceMatrix& distances() const { return d_; }
  const Rational& open_neighborhood_length(Vertex i) const { return open_l_[i]; }
  const Rational& closed_neighborhood_length(Vertex i) const { return closed_l_[i]; }

 private:
  RelationResult eval(const RelationSpec& spec, const Subject& s) const;

  const Graph& g_;
  const CentralityProfile& p_;
  const DistanceMatrix& d_;
  std::vector<Rational> open_l_;    // L(N(i)), ambient distances
  std::vector<Rational> closed_l_;  // L(N'(i)), ambient distances
};

// Every subject in the relation's scope, in subject order. Requires a connected
// graph with n >= 2; `p` and `d` must be computed from `g`.
std::vector<RelationResult> evaluate(const RelationSpec& spec, const Graph& g, const CentralityProfile& p,
                                     const DistanceMatrix& d, const EvaluationOptions& options = {});

// A single subject; used to replay witnesses.
RelationResult evaluate_subject(const RelationSpec& spec, const Graph& g, const CentralityProfile& p,
                                const DistanceMatrix& d, const Subject& subject);

// (1/d_i) * sum over v in N(i) of the radiality of v computed inside the
// induced graph N'(i), with N'(i)'s own distances and diameter.
Rational restricted_radiality_sum(const Graph& g, Vertex i);

// For all i, j: d_i <= d_j implies Str(i) <= Str(j).
bool monotone_coupling(const CentralityProfile& p);
// Some pair with d_i < d_j and Str(i) < Str(j).
bool strict_coupling_pair(const CentralityProfile& p);

}  // namespace aspl
