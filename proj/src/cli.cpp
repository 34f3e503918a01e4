#include "aspl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "aspl/generators.hpp"
#include "aspl/graph.hpp"
#include "aspl/metrics.hpp"
#include "aspl/miner.hpp"
#include "aspl/relations.hpp"
#include "aspl/report.hpp"

namespace aspl {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::vector<RelationId> resolve_relations(const std::vector<std::string>& names) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) return all_relations();
  std::vector<RelationId> out;
  for (const auto& name : names) {
    const auto id = parse_relation(name);
    if (!id) throw UsageError("unknown relation id '" + name + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  // Catalog order, independent of how the list was typed.
  std::vector<RelationId> ordered;
  for (auto id : all_relations()) {
    if (std::find(out.begin(), out.end(), id) != out.end()) ordered.push_back(id);
  }
  return ordered;
}

Model resolve_model(const std::string& name) {
  const auto model = parse_model(name);
  if (!model) throw UsageError("unknown model '" + name + "'");
  return *model;
}

void emit(std::ostream& out, const std::string& format, const std::vector<std::string>& args, Json payload,
          const std::string& text) {
  if (format == "json") {
    out << document(args, std::move(payload)).dump(2) << '\n';
  } else {
    out << text;
  }
}

struct GeneratorFlags {
  std::string model;
  ModelParams params;
  std::uint64_t seed = 0;

  void attach(CLI::App& cmd) {
    cmd.add_option("--n", params.n, "Vertex count");
    cmd.add_option("--k", params.k, "Watts-Strogatz lattice degree (even)");
    cmd.add_option("--p", params.p, "Edge / rewiring probability");
    cmd.add_option("--leaves", params.leaves, "Star leaf count");
    cmd.add_option("--seed", seed, "Random seed");
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact centrality metrics and shortest-path-length relation auditor", "aspl"};
  app.require_subcommand(1);
  std::string format = "text";
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string input;
  std::vector<std::string> relation_names;

  auto* compute = app.add_subcommand("compute", "Print the centrality profile of an edge-list graph");
  compute->add_option("input", input, "Edge-list file, or - for stdin")->required();
  add_format(compute);

  auto* check = app.add_subcommand("check", "Evaluate relations on an edge-list graph");
  check->add_option("input", input, "Edge-list file, or - for stdin")->required();
  check->add_option("--relations", relation_names, "Relation ids, comma separated, or 'all'")->delimiter(',');
  add_format(check);

  auto* mine = app.add_subcommand("mine", "Evaluate relations over an exhaustive or random graph population");
  std::optional<std::size_t> n_max;
  GeneratorFlags mine_gen;
  std::optional<std::uint64_t> trials;
  MiningOptions mining;
  bool timing = false;
  mine->add_option("--n-max", n_max, "Enumerate all connected graphs with 2..N vertices");
  mine->add_option("--model", mine_gen.model, "Random model: gnp, watts_strogatz, ...");
  mine->add_option("--trials", trials, "Random graphs to draw");
  mine_gen.attach(*mine);
  mine->add_option("--relations", relation_names, "Relation ids, comma separated, or 'all'")->delimiter(',');
  mine->add_option("--witness-cap", mining.witness_cap, "Violation witnesses kept per relation");
  mine->add_option("--workers", mining.workers, "Worker threads")->check(CLI::Range(1, 256));
  mine->add_flag("--timing", timing, "Include wall-clock duration (output is then not reproducible)");
  add_format(mine);

  auto* gen = app.add_subcommand("gen", "Write a generated graph as a canonical edge list");
  GeneratorFlags gen_flags;
  std::string output = "-";
  gen->add_option("--model", gen_flags.model, "path, cycle, star, complete, gnp, watts_strogatz")->required();
  gen_flags.attach(*gen);
  gen->add_option("-o,--output", output, "Output path, or - for stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*compute) {
      const Graph g = read_graph(input);
      if (g.n() < 2) throw UsageError("graph needs at least two vertices");
      const CentralityProfile p = profile(g);
      emit(out, format, args, to_json(p), to_text(p));
      return kExitOk;
    }

    if (*check) {
      const auto relations = resolve_relations(relation_names);
      const Graph g = read_graph(input);
      if (g.n() < 2) throw UsageError("graph needs at least two vertices");
      const DistanceMatrix d = apsp(g);
      const CentralityProfile p = profile(g, d);
      const RelationEvaluator evaluator(g, p, d);
      std::vector<RelationResult> results;
      bool hard_violation = false;
      for (auto id : relations) {
        for (auto& r : evaluator.evaluate(relation_spec(id))) {
          hard_violation |= r.status == Status::kViolated && !relation_spec(id).audit();
          results.push_back(std::move(r));
        }
      }
      emit(out, format, args, to_json(results), to_text(results));
      return hard_violation ? kExitViolation : kExitOk;
    }

    if (*mine) {
      const bool exhaustive = n_max.has_value();
      const bool random = !mine_gen.model.empty() || trials.has_value();
      if (exhaustive == random) throw UsageError("mine needs exactly one of --n-max or --model/--trials");
      const auto relations = resolve_relations(relation_names);
      MiningReport report;
      if (exhaustive) {
        report = mine_exhaustive(*n_max, relations, mining);
      } else {
        if (mine_gen.model.empty() || !trials) throw UsageError("random mining needs --model and --trials");
        report = mine_random(resolve_model(mine_gen.model), mine_gen.params, *trials, mine_gen.seed, relations,
                             mining);
      }
      emit(out, format, args, to_json(report, timing), to_text(report, timing));
      return report.ok() ? kExitOk : kExitViolation;
    }

    if (*gen) {
      const Graph g = generate(resolve_model(gen_flags.model), gen_flags.params, gen_flags.seed);
      const std::string text = serialize_edge_list(g);
      if (output == "-") {
        out << text;
      } else {
        std::ofstream file(output);
        if (!file) throw UsageError("cannot write '" + output + "'");
        file << text;
      }
      return kExitOk;
    }
  } catch (const DisconnectedGraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDisconnected;
  } catch (const std::exception& e) {
    // Parse errors, invalid parameters, unknown ids; all usage-class failures.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace aspl
