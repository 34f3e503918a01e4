#include "aspl/miner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "aspl/metrics.hpp"
#include "aspl/rng.hpp"

namespace aspl {

void RelationTally::add(Status status) {
  switch (status) {
    case Status::kHolds: ++holds; break;
    case Status::kEquality: ++equality; break;
    case Status::kViolated: ++violated; break;
    case Status::kSkippedPrecondition: ++skipped; break;
  }
}

RelationTally& RelationTally::operator+=(const RelationTally& other) {
  holds += other.holds;
  equality += other.equality;
  violated += other.violated;
  skipped += other.skipped;
  return *this;
}

StrictnessStats& StrictnessStats::operator+=(const StrictnessStats& other) {
  evaluated += other.evaluated;
  strict_pair += other.strict_pair;
  strict_pair_holds += other.strict_pair_holds;
  strict_pair_equality += other.strict_pair_equality;
  strict_pair_violated += other.strict_pair_violated;
  return *this;
}

RelationResult replay(const Witness& witness) {
  const Graph g = parse_edge_list(witness.edge_list);
  const DistanceMatrix d = apsp(g);
  const CentralityProfile p = profile(g, d);
  return evaluate_subject(relation_spec(witness.id), g, p, d, witness.subject);
}

namespace {

void append_capped(std::vector<std::string>& dst, const std::vector<std::string>& src, std::size_t cap) {
  for (const auto& s : src) {
    if (dst.size() >= cap) break;
    dst.push_back(s);
  }
}

}  // namespace

void ImplicationAudit::record(const Graph& g, bool ecf, bool geo, std::size_t witness_cap) {
  ++graphs;
  even_cycle_free += ecf;
  geodetic += geo;
  if (ecf && geo) ++ecf_and_geodetic;
  if (ecf && !geo) {
    ++ecf_not_geodetic;
    if (ecf_not_geodetic_witnesses.size() < witness_cap) ecf_not_geodetic_witnesses.push_back(serialize_edge_list(g));
  }
  if (geo && !ecf) {
    ++geodetic_not_ecf;
    if (geodetic_not_ecf_witnesses.size() < witness_cap) geodetic_not_ecf_witnesses.push_back(serialize_edge_list(g));
  }
}

void ImplicationAudit::merge(const ImplicationAudit& other, std::size_t witness_cap) {
  graphs += other.graphs;
  even_cycle_free += other.even_cycle_free;
  geodetic += other.geodetic;
  ecf_and_geodetic += other.ecf_and_geodetic;
  ecf_not_geodetic += other.ecf_not_geodetic;
  geodetic_not_ecf += other.geodetic_not_ecf;
  append_capped(ecf_not_geodetic_witnesses, other.ecf_not_geodetic_witnesses, witness_cap);
  append_capped(geodetic_not_ecf_witnesses, other.geodetic_not_ecf_witnesses, witness_cap);
}

std::uint64_t MiningReport::non_audit_violations() const {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < relations.size(); ++k) {
    if (!relation_spec(relations[k]).audit()) total += tallies[k].violated;
  }
  return total;
}

std::uint64_t MiningReport::audit_violations() const {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < relations.size(); ++k) {
    if (relation_spec(relations[k]).audit()) total += tallies[k].violated;
  }
  return total;
}

const RelationTally* MiningReport::tally(RelationId id) const {
  for (std::size_t k = 0; k < relations.size(); ++k) {
    if (relations[k] == id) return &tallies[k];
  }
  return nullptr;
}

void MiningReport::merge(const MiningReport& other) {
  if (other.relations != relations) throw std::invalid_argument("cannot merge reports over different relations");
  graphs_evaluated += other.graphs_evaluated;
  for (const auto& [n, count] : other.graphs_by_n) {
    if (!graphs_by_n.empty() && graphs_by_n.back().first == n) {
      graphs_by_n.back().second += count;
    } else {
      graphs_by_n.emplace_back(n, count);
    }
  }
  for (std::size_t k = 0; k < relations.size(); ++k) {
    tallies[k] += other.tallies[k];
    for (const auto& w : other.witnesses[k]) {
      if (witnesses[k].size() >= witness_cap) break;
      witnesses[k].push_back(w);
    }
  }
  implication.merge(other.implication, witness_cap);
  r12_strictness += other.r12_strictness;
  duration_seconds += other.duration_seconds;
}

std::vector<RelationId> all_relations() {
  std::vector<RelationId> out;
  for (const auto& spec : catalog()) out.push_back(spec.id);
  return out;
}

namespace {

MiningReport empty_report(const Population& population, const std::vector<RelationId>& relations,
                          std::size_t witness_cap) {
  MiningReport r;
  r.population = population;
  r.relations = relations;
  r.witness_cap = witness_cap;
  r.tallies.resize(relations.size());
  r.witnesses.resize(relations.size());
  return r;
}

EvaluationOptions evaluation_options(const MiningOptions& options, std::uint64_t seed) {
  EvaluationOptions eo;
  eo.subsets.min_size = 2;
  eo.subsets.sample_count = options.subset_budget;
  eo.subsets.seed = seed;
  // Largest n whose exhaustive subset count 2^n - n - 1 stays within budget.
  std::size_t max_n = 2;
  while (max_n < 62 && (std::uint64_t{1} << (max_n + 1)) - (max_n + 1) - 1 <= options.subset_budget) ++max_n;
  eo.subsets.exhaustive_max_n = max_n;
  return eo;
}

void mine_graph(const Graph& g, const std::vector<const RelationSpec*>& specs, const EvaluationOptions& eo,
                MiningReport& report) {
  const DistanceMatrix d = apsp(g);
  const CentralityProfile p = profile(g, d);
  const RelationEvaluator evaluator(g, p, d);
  ++report.graphs_evaluated;
  if (report.graphs_by_n.empty() || report.graphs_by_n.back().first != g.n()) {
    report.graphs_by_n.emplace_back(g.n(), 0);
  }
  ++report.graphs_by_n.back().second;
  report.implication.record(g, p.even_cycle_free, p.geodetic, report.witness_cap);

  std::string edge_list;  // serialized lazily, only when a witness is kept
  for (std::size_t k = 0; k < specs.size(); ++k) {
    for (auto& result : evaluator.evaluate(*specs[k], eo)) {
      report.tallies[k].add(result.status);
      if (specs[k]->id == RelationId::R12 && result.status != Status::kSkippedPrecondition) {
        auto& st = report.r12_strictness;
        ++st.evaluated;
        if (strict_coupling_pair(p)) {
          ++st.strict_pair;
          st.strict_pair_holds += result.status == Status::kHolds;
          st.strict_pair_equality += result.status == Status::kEquality;
          st.strict_pair_violated += result.status == Status::kViolated;
        }
      }
      if (result.status == Status::kViolated && report.witnesses[k].size() < report.witness_cap) {
        if (edge_list.empty()) edge_list = serialize_edge_list(g);
        report.witnesses[k].push_back(
            Witness{result.id, edge_list, std::move(result.subject), std::move(result.lhs), std::move(result.rhs)});
      }
    }
  }
}

// Runs tasks [0, count) on `workers` threads; each task writes its own slot,
// and the slots are merged in index order so output is worker-independent.
template <typename Task>
MiningReport run_partitioned(std::size_t count, std::size_t workers, const MiningReport& seed_report, Task task) {
  std::vector<MiningReport> parts(count, seed_report);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i, parts[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(workers, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  MiningReport merged = seed_report;
  for (const auto& part : parts) merged.merge(part);
  return merged;
}

std::vector<const RelationSpec*> resolve(const std::vector<RelationId>& relations) {
  std::vector<const RelationSpec*> specs;
  for (auto id : relations) specs.push_back(&relation_spec(id));
  return specs;
}

struct MaskChunk {
  std::size_t n;
  std::uint64_t begin;
  std::uint64_t end;
};

std::vector<MaskChunk> mask_chunks(std::size_t n_max, std::size_t workers) {
  // A few chunks per worker keeps threads busy despite uneven chunk cost.
  const std::uint64_t pieces = workers <= 1 ? 1 : 4 * workers;
  std::vector<MaskChunk> chunks;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::uint64_t total = ConnectedGraphStream::mask_count(n);
    const std::uint64_t parts = std::min(pieces, total);
    for (std::uint64_t c = 0; c < parts; ++c) {
      chunks.push_back({n, total / parts * c + std::min(c, total % parts),
                        total / parts * (c + 1) + std::min(c + 1, total % parts)});
    }
  }
  return chunks;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

MiningReport mine_exhaustive(std::size_t n_max, const std::vector<RelationId>& relations,
                             const MiningOptions& options) {
  if (n_max < 2 || n_max > ConnectedGraphStream::kMaxVertices) {
    throw std::invalid_argument("mine_exhaustive: n_max must lie in [2, 8]");
  }
  const auto start = std::chrono::steady_clock::now();
  Population population;
  population.mode = Population::Mode::kExhaustive;
  population.n_max = n_max;
  const auto specs = resolve(relations);
  const auto eo = evaluation_options(options, 0);
  const auto chunks = mask_chunks(n_max, options.workers);
  MiningReport report = run_partitioned(chunks.size(), options.workers,
                                        empty_report(population, relations, options.witness_cap),
                                        [&](std::size_t i, MiningReport& part) {
                                          ConnectedGraphStream stream(chunks[i].n, chunks[i].begin, chunks[i].end);
                                          while (auto item = stream.next()) mine_graph(item->graph, specs, eo, part);
                                        });
  report.duration_seconds = seconds_since(start);
  return report;
}

MiningReport mine_random(Model model, const ModelParams& params, std::uint64_t trials, std::uint64_t seed,
                         const std::vector<RelationId>& relations, const MiningOptions& options) {
  if (trials < 1) throw std::invalid_argument("mine_random: trials must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  Population population;
  population.mode = Population::Mode::kRandom;
  population.model = model;
  population.params = params;
  population.trials = trials;
  population.seed = seed;
  const auto specs = resolve(relations);

  const std::uint64_t pieces = options.workers <= 1 ? 1 : std::min<std::uint64_t>(trials, 4 * options.workers);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  for (std::uint64_t c = 0; c < pieces; ++c) {
    ranges.emplace_back(trials / pieces * c + std::min(c, trials % pieces),
                        trials / pieces * (c + 1) + std::min(c + 1, trials % pieces));
  }
  MiningReport report = run_partitioned(
      ranges.size(), options.workers, empty_report(population, relations, options.witness_cap),
      [&](std::size_t i, MiningReport& part) {
        for (std::uint64_t trial = ranges[i].first; trial < ranges[i].second; ++trial) {
          const std::uint64_t trial_seed = derive_seed(seed, trial);
          std::optional<Graph> g;
          for (std::size_t attempt = 0; attempt < options.max_connect_retries && !g; ++attempt) {
            Graph candidate = generate(model, params, derive_seed(trial_seed, attempt));
            if (candidate.n() >= 2 && candidate.connected()) g = std::move(candidate);
          }
          if (!g) {
            throw std::runtime_error("mine_random: no connected graph after " +
                                     std::to_string(options.max_connect_retries) + " retries (trial " +
                                     std::to_string(trial) + ")");
          }
          mine_graph(*g, specs, evaluation_options(options, trial_seed), part);
        }
      });
  report.duration_seconds = seconds_since(start);
  return report;
}

MiningReport audit_geodetic_equivalence(std::size_t n_max, std::size_t witness_cap) {
  if (n_max < 2 || n_max > ConnectedGraphStream::kMaxVertices) {
    throw std::invalid_argument("audit_geodetic_equivalence: n_max must lie in [2, 8]");
  }
  MiningOptions options;
  options.witness_cap = witness_cap;
  return mine_exhaustive(n_max, {}, options);
}

std::vector<CensusEntry> equality_census(RelationId id, std::size_t n_max) {
  if (n_max < 2 || n_max > 7) throw std::invalid_argument("equality_census: n_max must lie in [2, 7]");
  const RelationSpec& spec = relation_spec(id);
  std::vector<CensusEntry> out;
  for (std::size_t n = 2; n <= n_max; ++n) {
    ConnectedGraphStream stream(n);
    while (auto item = stream.next()) {
      const DistanceMatrix d = apsp(item->graph);
      const CentralityProfile p = profile(item->graph, d);
      for (auto& r : evaluate(spec, item->graph, p, d)) {
        if (r.status == Status::kEquality) {
          out.push_back({n, item->mask, std::move(r.subject), std::move(r.lhs), std::move(r.rhs)});
        }
      }
    }
  }
  return out;
}

}  // namespace aspl
