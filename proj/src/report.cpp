#include "aspl/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace aspl {

namespace {

Json rational_column(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

Json decimal_column(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_double());
  return out;
}

Json params_json(Model model, const ModelParams& params) {
  Json j = Json::object();
  switch (model) {
    case Model::kStar:
      j["leaves"] = params.leaves;
      break;
    case Model::kPath:
    case Model::kCycle:
    case Model::kComplete:
      j["n"] = params.n;
      break;
    case Model::kGnp:
      j["n"] = params.n;
      j["p"] = params.p;
      break;
    case Model::kWattsStrogatz:
      j["n"] = params.n;
      j["k"] = params.k;
      j["p"] = params.p;
      break;
  }
  return j;
}

std::string decimal(const Rational& r) {
  std::ostringstream out;
  out << std::setprecision(6) << r.to_double();
  return out.str();
}

std::string subject_text(const Subject& s) {
  switch (s.kind) {
    case Subject::Kind::kGraph: return "graph";
    case Subject::Kind::kVertex: return "vertex " + std::to_string(s.vertex);
    case Subject::Kind::kSubset: {
      std::string out = "subset {";
      for (std::size_t k = 0; k < s.members.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(s.members[k]);
      }
      return out + "}";
    }
  }
  return "?";
}

}  // namespace

Json to_json(const CentralityProfile& p) {
  Json j;
  j["n"] = p.n;
  j["m"] = p.m;
  j["diameter"] = p.diameter;
  j["L"] = p.avg_path_length.to_string();
  j["C_WS"] = p.average_clustering.to_string();
  j["C_global"] = p.global_clustering ? Json(p.global_clustering->to_string()) : Json(nullptr);
  j["geodetic"] = p.geodetic;
  j["even_cycle_free"] = p.even_cycle_free;
  j["pendant_count"] = p.pendant_count();
  j["degree"] = p.degree;
  j["local_clustering"] = rational_column(p.local_clustering);
  j["closeness"] = rational_column(p.closeness);
  j["radiality"] = rational_column(p.radiality);
  j["stress"] = p.stress;
  j["pendant"] = p.pendant;
  j["complete_neighborhood"] = p.complete_neighborhood;
  Json dec;
  dec["L"] = p.avg_path_length.to_double();
  dec["C_WS"] = p.average_clustering.to_double();
  dec["C_global"] = p.global_clustering ? Json(p.global_clustering->to_double()) : Json(nullptr);
  dec["local_clustering"] = decimal_column(p.local_clustering);
  dec["closeness"] = decimal_column(p.closeness);
  dec["radiality"] = decimal_column(p.radiality);
  j["decimal"] = std::move(dec);
  return j;
}

Json to_json(const Subject& s) {
  Json j;
  switch (s.kind) {
    case Subject::Kind::kGraph:
      j["type"] = "graph";
      break;
    case Subject::Kind::kVertex:
      j["type"] = "vertex";
      j["vertex"] = s.vertex;
      break;
    case Subject::Kind::kSubset:
      j["type"] = "subset";
      j["members"] = s.members;
      break;
  }
  return j;
}

Subject subject_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "graph") return Subject::graph();
  if (type == "vertex") return Subject::at_vertex(j.at("vertex").get<Vertex>());
  if (type == "subset") return Subject::subset(j.at("members").get<std::vector<Vertex>>());
  throw std::invalid_argument("unknown subject type '" + type + "'");
}

Json to_json(const RelationResult& r) {
  const RelationSpec& spec = relation_spec(r.id);
  Json j;
  j["relation"] = relation_name(r.id);
  j["kind"] = kind_name(spec.kind);
  j["audit"] = spec.audit();
  j["subject"] = to_json(r.subject);
  j["status"] = status_name(r.status);
  j["audit_flag"] = spec.audit() && r.status == Status::kViolated;
  j["lhs"] = r.lhs.to_string();
  j["rhs"] = r.rhs.to_string();
  j["slack"] = r.slack.to_string();
  j["decimal"] = {{"lhs", r.lhs.to_double()}, {"rhs", r.rhs.to_double()}, {"slack", r.slack.to_double()}};
  return j;
}

Json to_json(const std::vector<RelationResult>& results) {
  Json list = Json::array();
  std::uint64_t hard = 0;
  std::uint64_t audit = 0;
  for (const auto& r : results) {
    list.push_back(to_json(r));
    if (r.status == Status::kViolated) (relation_spec(r.id).audit() ? audit : hard) += 1;
  }
  Json j;
  j["results"] = std::move(list);
  j["non_audit_violations"] = hard;
  j["audit_violations"] = audit;
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["relation"] = relation_name(w.id);
  j["edge_list"] = w.edge_list;
  j["subject"] = to_json(w.subject);
  j["lhs"] = w.lhs.to_string();
  j["rhs"] = w.rhs.to_string();
  return j;
}

Witness witness_from_json(const Json& j) {
  const auto id = parse_relation(j.at("relation").get<std::string>());
  if (!id) throw std::invalid_argument("unknown relation in witness");
  return Witness{*id, j.at("edge_list").get<std::string>(), subject_from_json(j.at("subject")),
                 Rational::parse(j.at("lhs").get<std::string>()), Rational::parse(j.at("rhs").get<std::string>())};
}

Json to_json(const MiningReport& report, bool include_timing) {
  Json j;
  Json pop;
  if (report.population.mode == Population::Mode::kExhaustive) {
    pop["mode"] = "exhaustive";
    pop["n_max"] = report.population.n_max;
  } else {
    pop["mode"] = "random";
    pop["model"] = model_name(report.population.model);
    pop["params"] = params_json(report.population.model, report.population.params);
    pop["trials"] = report.population.trials;
    pop["seed"] = report.population.seed;
  }
  j["population"] = std::move(pop);
  j["witness_cap"] = report.witness_cap;
  j["graphs_evaluated"] = report.graphs_evaluated;
  Json by_n = Json::array();
  for (const auto& [n, count] : report.graphs_by_n) by_n.push_back({{"n", n}, {"count", count}});
  j["graphs_by_n"] = std::move(by_n);

  Json rels = Json::array();
  for (std::size_t k = 0; k < report.relations.size(); ++k) {
    const RelationSpec& spec = relation_spec(report.relations[k]);
    const RelationTally& t = report.tallies[k];
    Json r;
    r["relation"] = relation_name(spec.id);
    r["kind"] = kind_name(spec.kind);
    r["audit"] = spec.audit();
    r["subjects"] = t.total();
    r["holds"] = t.holds;
    r["equality"] = t.equality;
    r["violated"] = t.violated;
    r["skipped_precondition"] = t.skipped;
    r["audit_flag"] = spec.audit() && t.violated > 0;
    Json ws = Json::array();
    for (const auto& w : report.witnesses[k]) ws.push_back(to_json(w));
    r["witnesses"] = std::move(ws);
    rels.push_back(std::move(r));
  }
  j["relations"] = std::move(rels);

  const auto& a = report.implication;
  j["implication"] = {
      {"graphs", a.graphs},
      {"even_cycle_free", a.even_cycle_free},
      {"geodetic", a.geodetic},
      {"ecf_and_geodetic", a.ecf_and_geodetic},
      {"ecf_not_geodetic", a.ecf_not_geodetic},
      {"geodetic_not_ecf", a.geodetic_not_ecf},
      {"ecf_not_geodetic_witnesses", a.ecf_not_geodetic_witnesses},
      {"geodetic_not_ecf_witnesses", a.geodetic_not_ecf_witnesses},
  };
  if (report.tally(RelationId::R12) != nullptr) {
    const auto& s = report.r12_strictness;
    j["r12_strictness"] = {
        {"evaluated", s.evaluated},
        {"strict_pair", s.strict_pair},
        {"strict_pair_holds", s.strict_pair_holds},
        {"strict_pair_equality", s.strict_pair_equality},
        {"strict_pair_violated", s.strict_pair_violated},
    };
  }
  j["non_audit_violations"] = report.non_audit_violations();
  j["audit_violations"] = report.audit_violations();
  j["ok"] = report.ok();
  if (include_timing) j["duration_seconds"] = report.duration_seconds;
  return j;
}

Json document(const std::vector<std::string>& command, Json payload) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["payload"] = std::move(payload);
  return j;
}

std::string to_text(const CentralityProfile& p) {
  std::ostringstream out;
  out << "n " << p.n << "  m " << p.m << "  diameter " << p.diameter << '\n';
  out << "L        " << p.avg_path_length << "  (" << decimal(p.avg_path_length) << ")\n";
  out << "C_WS     " << p.average_clustering << "  (" << decimal(p.average_clustering) << ")\n";
  if (p.global_clustering) {
    out << "C_global " << *p.global_clustering << "  (" << decimal(*p.global_clustering) << ")\n";
  } else {
    out << "C_global undefined\n";
  }
  out << "geodetic " << (p.geodetic ? "yes" : "no") << "  even_cycle_free " << (p.even_cycle_free ? "yes" : "no")
      << "  pendant " << p.pendant_count() << '\n';
  out << "vertex degree c_i closeness radiality stress\n";
  for (std::size_t v = 0; v < p.n; ++v) {
    out << v << ' ' << p.degree[v] << ' ' << p.local_clustering[v] << ' ' << p.closeness[v] << ' '
        << p.radiality[v] << ' ' << p.stress[v] << '\n';
  }
  return out.str();
}

std::string to_text(const std::vector<RelationResult>& results) {
  std::ostringstream out;
  std::uint64_t hard = 0;
  std::uint64_t audit = 0;
  for (const auto& r : results) {
    const bool is_audit = relation_spec(r.id).audit();
    out << relation_name(r.id) << ' ' << subject_text(r.subject) << ": " << status_name(r.status) << "  lhs "
        << r.lhs << "  rhs " << r.rhs << "  slack " << r.slack;
    if (is_audit && r.status == Status::kViolated) out << "  [audit]";
    out << '\n';
    if (r.status == Status::kViolated) (is_audit ? audit : hard) += 1;
  }
  out << "non-audit violations " << hard << ", audit violations " << audit << '\n';
  return out.str();
}

std::string to_text(const MiningReport& report, bool include_timing) {
  std::ostringstream out;
  if (report.population.mode == Population::Mode::kExhaustive) {
    out << "population exhaustive n_max=" << report.population.n_max << '\n';
  } else {
    out << "population random model=" << model_name(report.population.model)
        << " trials=" << report.population.trials << " seed=" << report.population.seed << '\n';
  }
  out << "graphs " << report.graphs_evaluated;
  for (const auto& [n, count] : report.graphs_by_n) out << "  n=" << n << ":" << count;
  out << '\n';
  out << "relation subjects holds equality violated skipped\n";
  for (std::size_t k = 0; k < report.relations.size(); ++k) {
    const auto& t = report.tallies[k];
    const bool audit = relation_spec(report.relations[k]).audit();
    out << relation_name(report.relations[k]) << ' ' << t.total() << ' ' << t.holds << ' ' << t.equality << ' '
        << t.violated << ' ' << t.skipped << (audit && t.violated ? "  [audit]" : "") << '\n';
    for (const auto& w : report.witnesses[k]) {
      std::string edges = w.edge_list;
      for (auto& c : edges) {
        if (c == '\n') c = ';';
      }
      out << "  witness " << subject_text(w.subject) << " lhs " << w.lhs << " rhs " << w.rhs << "  edges " << edges
          << '\n';
    }
  }
  const auto& a = report.implication;
  out << "implication graphs=" << a.graphs << " ecf=" << a.even_cycle_free << " geodetic=" << a.geodetic
      << " ecf_not_geodetic=" << a.ecf_not_geodetic << " geodetic_not_ecf=" << a.geodetic_not_ecf << '\n';
  if (report.tally(RelationId::R12) != nullptr) {
    const auto& s = report.r12_strictness;
    out << "r12_strictness evaluated=" << s.evaluated << " strict_pair=" << s.strict_pair
        << " holds=" << s.strict_pair_holds << " equality=" << s.strict_pair_equality
        << " violated=" << s.strict_pair_violated << '\n';
  }
  out << "non-audit violations " << report.non_audit_violations() << ", audit violations "
      << report.audit_violations() << '\n';
  if (include_timing) out << "duration " << report.duration_seconds << " s\n";
  return out.str();
}

}  // namespace aspl
