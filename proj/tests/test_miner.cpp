#include <gtest/gtest.h>

#include <algorithm>

#include "aspl/miner.hpp"
#include "aspl/report.hpp"
#include "oracles.hpp"

namespace aspl {
namespace {

const std::string kK4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

void expect_tallies_match_subjects(const MiningReport& report) {
  ASSERT_EQ(report.tallies.size(), report.relations.size());
  for (const auto& t : report.tallies) EXPECT_GT(t.total(), 0u);
}

TEST(MineExhaustive, GraphCounts) {
  const auto report = mine_exhaustive(5, all_relations());
  EXPECT_EQ(report.graphs_evaluated, 771u);
  const std::vector<std::pair<std::size_t, std::uint64_t>> by_n{{2, 1}, {3, 4}, {4, 38}, {5, 728}};
  EXPECT_EQ(report.graphs_by_n, by_n);
  EXPECT_EQ(report.non_audit_violations(), 0u);
  EXPECT_TRUE(report.ok());
  expect_tallies_match_subjects(report);

  // Per-graph relations tally once per graph, per-vertex ones once per vertex.
  const std::uint64_t vertices = 2 * 1 + 3 * 4 + 4 * 38 + 5 * 728;
  EXPECT_EQ(report.tally(RelationId::R8)->total(), 771u);
  EXPECT_EQ(report.tally(RelationId::R8)->equality, 771u);
  EXPECT_EQ(report.tally(RelationId::R1)->total(), vertices);
  EXPECT_EQ(report.tally(RelationId::R3)->total(), vertices);
}

TEST(MineExhaustive, R10EqualityExactlyOnGeodeticGraphs) {
  const auto report = mine_exhaustive(4, {RelationId::R10, RelationId::R10b});
  std::uint64_t geodetic = 0, graphs = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      ++graphs;
      const auto census = oracle::enumerate_shortest_paths(g);
      geodetic += std::all_of(census.sigma.begin(), census.sigma.end(), [](std::uint64_t s) { return s == 1; });
    }
  }
  const auto* r10 = report.tally(RelationId::R10);
  EXPECT_EQ(r10->violated, 0u);
  EXPECT_EQ(r10->holds, 0u);
  EXPECT_EQ(r10->equality, geodetic);
  EXPECT_EQ(r10->skipped, graphs - geodetic);
  const auto* r10b = report.tally(RelationId::R10b);
  EXPECT_EQ(r10b->equality, geodetic);
  EXPECT_EQ(r10b->holds, graphs - geodetic);
}

TEST(MineExhaustive, R12WitnessIsTheStar) {
  const auto report = mine_exhaustive(5, {RelationId::R12});
  EXPECT_GT(report.audit_violations(), 0u);
  EXPECT_EQ(report.non_audit_violations(), 0u);
  EXPECT_TRUE(report.ok());
  const auto& witnesses = report.witnesses.at(0);
  ASSERT_FALSE(witnesses.empty());
  EXPECT_LE(witnesses.size(), report.witness_cap);
  const auto star = std::find_if(witnesses.begin(), witnesses.end(),
                                 [](const Witness& w) { return w.edge_list == "0 1\n0 2\n0 3\n"; });
  ASSERT_NE(star, witnesses.end());
  EXPECT_EQ(star->lhs, Rational(1));
  EXPECT_EQ(star->rhs, Rational(13, 16));
  const auto& st = report.r12_strictness;
  const auto* r12 = report.tally(RelationId::R12);
  EXPECT_EQ(st.evaluated, r12->holds + r12->equality + r12->violated);
  EXPECT_LE(st.strict_pair, st.evaluated);
  EXPECT_EQ(st.strict_pair_holds + st.strict_pair_equality + st.strict_pair_violated, st.strict_pair);
}

TEST(MineExhaustive, WitnessCapBoundsListNotTallies) {
  const auto capped = mine_exhaustive(5, {RelationId::R12}, {.witness_cap = 2});
  const auto full = mine_exhaustive(5, {RelationId::R12}, {.witness_cap = 1000});
  EXPECT_EQ(capped.witnesses[0].size(), 2u);
  EXPECT_EQ(capped.tallies, full.tallies);
  EXPECT_EQ(full.witnesses[0].size(), full.tallies[0].violated);
  EXPECT_TRUE(std::equal(capped.witnesses[0].begin(), capped.witnesses[0].end(), full.witnesses[0].begin()));
}

TEST(MineExhaustive, WitnessesReplay) {
  const auto report = mine_exhaustive(5, {RelationId::R9, RelationId::R12}, {.witness_cap = 1000});
  for (const auto& list : report.witnesses) {
    for (const auto& w : list) {
      const auto r = replay(w);
      EXPECT_EQ(r.status, Status::kViolated);
      EXPECT_EQ(r.lhs, w.lhs);
      EXPECT_EQ(r.rhs, w.rhs);
      const auto round = witness_from_json(to_json(w));
      EXPECT_EQ(round, w);
    }
  }
}

TEST(MineExhaustive, PartitionSoundness) {
  const auto relations = all_relations();
  const auto one = mine_exhaustive(5, relations, {.workers = 1});
  const std::string reference = to_json(one, false).dump();
  for (std::size_t workers : {2, 3, 5}) {
    const auto many = mine_exhaustive(5, relations, {.workers = workers});
    EXPECT_EQ(many.tallies, one.tallies) << workers;
    EXPECT_EQ(many.witnesses, one.witnesses) << workers;
    EXPECT_EQ(many.implication, one.implication) << workers;
    EXPECT_EQ(to_json(many, false).dump(), reference) << workers;
  }
}

TEST(MineExhaustive, RangeChecked) {
  EXPECT_THROW(mine_exhaustive(1, all_relations()), std::invalid_argument);
  EXPECT_THROW(mine_exhaustive(9, all_relations()), std::invalid_argument);
}

TEST(MineRandom, IdentityAlwaysEqual) {
  const auto report = mine_random(Model::kGnp, {.n = 12, .p = 0.4}, 100, 0, {RelationId::R8});
  EXPECT_EQ(report.graphs_evaluated, 100u);
  EXPECT_EQ(report.tally(RelationId::R8)->equality, 100u);
  EXPECT_EQ(report.tally(RelationId::R8)->total(), 100u);
}

TEST(MineRandom, SmallWorldStressBound) {
  const auto report =
      mine_random(Model::kWattsStrogatz, {.n = 20, .k = 4, .p = 0.1}, 50, 3, {RelationId::R10b});
  EXPECT_EQ(report.graphs_evaluated, 50u);
  EXPECT_EQ(report.non_audit_violations(), 0u);
}

TEST(MineRandom, ClosenessBoundEqualityOnlyOnDistanceRegularSamples) {
  const auto report =
      mine_random(Model::kGnp, {.n = 8, .p = 0.5}, 200, 11, {RelationId::R7}, {.witness_cap = 1000});
  EXPECT_EQ(report.tally(RelationId::R7)->violated, 0u);
  EXPECT_EQ(report.tally(RelationId::R7)->total(), 200u);
}

TEST(MineRandom, DeterministicAndWorkerIndependent) {
  const auto a = mine_random(Model::kGnp, {.n = 10, .p = 0.3}, 40, 7, all_relations());
  const auto b = mine_random(Model::kGnp, {.n = 10, .p = 0.3}, 40, 7, all_relations(), {.workers = 3});
  EXPECT_EQ(to_json(a, false).dump(), to_json(b, false).dump());
  const auto c = mine_random(Model::kGnp, {.n = 10, .p = 0.3}, 40, 8, all_relations());
  EXPECT_NE(to_json(a, false).dump(), to_json(c, false).dump());
}

TEST(MineRandom, RetryCapExhaustion) {
  EXPECT_THROW(mine_random(Model::kGnp, {.n = 6, .p = 0.0}, 1, 0, {RelationId::R8}, {.max_connect_retries = 20}),
               std::runtime_error);
  EXPECT_THROW(mine_random(Model::kGnp, {.n = 6, .p = 0.5}, 0, 0, {RelationId::R8}), std::invalid_argument);
}

TEST(ImplicationAudit, ExhaustiveSmallOrders) {
  const auto three = audit_geodetic_equivalence(3);
  EXPECT_EQ(three.implication.graphs, 5u);
  EXPECT_EQ(three.implication.ecf_not_geodetic, 0u);
  EXPECT_EQ(three.implication.geodetic_not_ecf, 0u);
  EXPECT_TRUE(three.relations.empty());

  const auto four = audit_geodetic_equivalence(4);
  EXPECT_EQ(four.implication.ecf_not_geodetic, 0u);
  const auto& w = four.implication.geodetic_not_ecf_witnesses;
  EXPECT_NE(std::find(w.begin(), w.end(), kK4), w.end());

  const auto six = audit_geodetic_equivalence(6);
  EXPECT_EQ(six.implication.graphs, 1u + 4 + 38 + 728 + 26704);
  EXPECT_EQ(six.implication.ecf_not_geodetic, 0u);
  EXPECT_EQ(six.implication.ecf_and_geodetic, six.implication.even_cycle_free);
  EXPECT_EQ(six.implication.geodetic, six.implication.ecf_and_geodetic + six.implication.geodetic_not_ecf);
}

TEST(EqualityCensus, Examples) {
  const auto r11 = equality_census(RelationId::R11, 4);
  const Graph c4 = parse_edge_list("0 1\n1 2\n2 3\n0 3\n");
  EXPECT_TRUE(std::any_of(r11.begin(), r11.end(), [&](const CensusEntry& e) {
    return e.graph() == c4 && e.lhs == Rational(0) && e.rhs == Rational(0);
  }));

  const auto r4 = equality_census(RelationId::R4, 3);
  const Graph p3 = parse_edge_list("0 1\n1 2\n");
  EXPECT_TRUE(std::any_of(r4.begin(), r4.end(), [&](const CensusEntry& e) {
    return e.graph() == p3 && e.subject == Subject::at_vertex(1) && e.lhs == Rational(4, 3) &&
           e.rhs == Rational(4, 3);
  }));

  EXPECT_EQ(equality_census(RelationId::R8, 5).size(), 771u);
  EXPECT_THROW(equality_census(RelationId::R8, 8), std::invalid_argument);
}

TEST(EqualityCensus, EntriesReplay) {
  for (const auto& e : equality_census(RelationId::R7, 5)) {
    const Graph g = e.graph();
    const auto d = apsp(g);
    const auto p = profile(g, d);
    const auto r = evaluate_subject(relation_spec(RelationId::R7), g, p, d, e.subject);
    EXPECT_EQ(r.status, Status::kEquality);
    EXPECT_EQ(r.lhs, e.lhs);
  }
}

TEST(RelationTally, SumsAndMerge) {
  RelationTally t;
  for (Status s : {Status::kHolds, Status::kHolds, Status::kEquality, Status::kViolated, Status::kSkippedPrecondition}) {
    t.add(s);
  }
  EXPECT_EQ(t.total(), 5u);
  RelationTally u = t;
  u += t;
  EXPECT_EQ(u.holds, 4u);
  EXPECT_EQ(u.total(), 10u);
}

}  // namespace
}  // namespace aspl
