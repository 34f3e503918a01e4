#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aspl/generators.hpp"
#include "aspl/graph.hpp"
#include "aspl/rational.hpp"
#include "aspl/relations.hpp"

namespace aspl {

struct RelationTally {
  std::uint64_t holds = 0;
  std::uint64_t equality = 0;
  std::uint64_t violated = 0;
  std::uint64_t skipped = 0;

  std::uint64_t total() const { return holds + equality + violated + skipped; }
  void add(Status status);
  RelationTally& operator+=(const RelationTally& other);
  friend bool operator==(const RelationTally&, const RelationTally&) = default;
};

struct Witness {
  RelationId id;
  std::string edge_list;  // canonical serialize_edge_list text
  Subject subject;
  Rational lhs;
  Rational rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Replays a witness through evaluate_subject.
RelationResult replay(const Witness& witness);

// Empirical check of "even-cycle-free implies geodetic" and its converse.
struct ImplicationAudit {
  std::uint64_t graphs = 0;
  std::uint64_t even_cycle_free = 0;
  std::uint64_t geodetic = 0;
  std::uint64_t ecf_and_geodetic = 0;
  std::uint64_t ecf_not_geodetic = 0;
  std::uint64_t geodetic_not_ecf = 0;
  std::vector<std::string> ecf_not_geodetic_witnesses;
  std::vector<std::string> geodetic_not_ecf_witnesses;

  void record(const Graph& g, bool ecf, bool geo, std::size_t witness_cap);
  void merge(const ImplicationAudit& other, std::size_t witness_cap);
  friend bool operator==(const ImplicationAudit&, const ImplicationAudit&) = default;
};

// Observed behaviour of R12 where some pair has d_i < d_j and Str(i) < Str(j).
struct StrictnessStats {
  std::uint64_t evaluated = 0;  // R12 results with preconditions satisfied
  std::uint64_t strict_pair = 0;
  std::uint64_t strict_pair_holds = 0;
  std::uint64_t strict_pair_equality = 0;
  std::uint64_t strict_pair_violated = 0;

  StrictnessStats& operator+=(const StrictnessStats& other);
  friend bool operator==(const StrictnessStats&, const StrictnessStats&) = default;
};

struct Population {
  enum class Mode { kExhaustive, kRandom };
  Mode mode = Mode::kExhaustive;
  std::size_t n_max = 0;  // exhaustive
  Model model = Model::kGnp;  // random
  ModelParams params{};
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const Population&, const Population&) = default;
};

struct MiningOptions {
  std::size_t witness_cap = 16;
  std::size_t workers = 1;
  // R6 subjects per graph: exhaustive while the subset count fits, otherwise
  // this many seeded samples.
  std::size_t subset_budget = 512;
  std::size_t max_connect_retries = 1000;
};

struct MiningReport {
  Population population;
  std::vector<RelationId> relations;
  std::size_t witness_cap = 16;
  std::uint64_t graphs_evaluated = 0;
  std::vector<std::pair<std::size_t, std::uint64_t>> graphs_by_n;  // ascending n
  std::vector<RelationTally> tallies;         // aligned with relations
  std::vector<std::vector<Witness>> witnesses;  // aligned with relations
  ImplicationAudit implication;
  StrictnessStats r12_strictness;
  double duration_seconds = 0.0;

  std::uint64_t non_audit_violations() const;
  std::uint64_t audit_violations() const;
  bool ok() const { return non_audit_violations() == 0; }
  const RelationTally* tally(RelationId id) const;

  // Appends `other`, which must cover a later part of the same population.
  void merge(const MiningReport& other);
};

std::vector<RelationId> all_relations();

// Every selected relation on every labeled connected graph with
// 2 <= n <= n_max (n_max in [2, 8]).
MiningReport mine_exhaustive(std::size_t n_max, const std::vector<RelationId>& relations,
                             const MiningOptions& options = {});

// `trials` seeded draws from a generator, each retried until connected.
MiningReport mine_random(Model model, const ModelParams& params, std::uint64_t trials, std::uint64_t seed,
                         const std::vector<RelationId>& relations, const MiningOptions& options = {});

// Implication audit only (no relations), over 2 <= n <= n_max.
MiningReport audit_geodetic_equivalence(std::size_t n_max, std::size_t witness_cap = 16);

struct CensusEntry {
  std::size_t n;
  std::uint64_t mask;  // see Graph::from_bitmask
  Subject subject;
  Rational lhs;
  Rational rhs;

  Graph graph() const { return Graph::from_bitmask(n, mask); }
};

// Every (graph, subject) with status equality, 2 <= n <= n_max (<= 7).
std::vector<CensusEntry> equality_census(RelationId id, std::size_t n_max);

}  // namespace aspl
