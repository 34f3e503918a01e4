#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "aspl/generators.hpp"
#include "aspl/graph.hpp"
#include "aspl/metrics.hpp"
#include "aspl/miner.hpp"
#include "aspl/relations.hpp"
#include "aspl/report.hpp"

namespace py = pybind11;

namespace aspl {
namespace {

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.to_string());
}

py::list fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(fraction(v));
  return out;
}

py::object from_json(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<RelationId> relation_ids(const std::optional<std::vector<std::string>>& names) {
  if (!names) return all_relations();
  std::vector<RelationId> ids;
  for (const auto& name : *names) {
    const auto id = parse_relation(name);
    if (!id) throw std::invalid_argument("unknown relation id '" + name + "'");
    ids.push_back(*id);
  }
  return ids;
}

Model model_of(const std::string& name) {
  const auto model = parse_model(name);
  if (!model) throw std::invalid_argument("unknown model '" + name + "'");
  return *model;
}

py::dict profile_dict(const CentralityProfile& p) {
  py::dict d;
  d["n"] = p.n;
  d["m"] = p.m;
  d["diameter"] = p.diameter;
  d["L"] = fraction(p.avg_path_length);
  d["C_WS"] = fraction(p.average_clustering);
  d["C_global"] = p.global_clustering ? fraction(*p.global_clustering) : py::none();
  d["geodetic"] = p.geodetic;
  d["even_cycle_free"] = p.even_cycle_free;
  d["pendant_count"] = p.pendant_count();
  d["degree"] = p.degree;
  d["local_clustering"] = fractions(p.local_clustering);
  d["closeness"] = fractions(p.closeness);
  d["radiality"] = fractions(p.radiality);
  d["stress"] = p.stress;
  d["pendant"] = p.pendant;
  d["complete_neighborhood"] = p.complete_neighborhood;
  return d;
}

py::dict result_dict(const RelationResult& r) {
  const auto& spec = relation_spec(r.id);
  py::dict d;
  d["relation"] = std::string(relation_name(r.id));
  d["kind"] = std::string(kind_name(spec.kind));
  d["audit"] = spec.audit();
  d["subject"] = from_json(to_json(r.subject));
  d["status"] = std::string(status_name(r.status));
  d["lhs"] = fraction(r.lhs);
  d["rhs"] = fraction(r.rhs);
  d["slack"] = fraction(r.slack);
  return d;
}

py::list check(const Graph& g, const std::optional<std::vector<std::string>>& relations) {
  const DistanceMatrix d = apsp(g);
  const CentralityProfile p = profile(g, d);
  const RelationEvaluator evaluator(g, p, d);
  py::list out;
  for (auto id : relation_ids(relations)) {
    for (const auto& r : evaluator.evaluate(relation_spec(id))) out.append(result_dict(r));
  }
  return out;
}

}  // namespace
}  // namespace aspl

PYBIND11_MODULE(_core, m) {
  using namespace aspl;
  m.doc() = "Exact centrality metrics and relation mining over small graphs";

  py::register_exception<DisconnectedGraphError>(m, "DisconnectedGraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_edge_list(text); }, py::arg("text"))
      .def_static("from_bitmask", &Graph::from_bitmask, py::arg("n"), py::arg("mask"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", [](const Graph& g, Vertex v) {
        const auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      }, py::arg("v"))
      .def("connected", &Graph::connected)
      .def("to_edge_list", &serialize_edge_list)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream s;
        s << "Graph(n=" << g.n() << ", m=" << g.m() << ")";
        return s.str();
      });

  m.def("generate", [](const std::string& model, std::size_t n, std::size_t leaves, std::size_t k, double p,
                       std::uint64_t seed) {
    return generate(model_of(model), {.n = n, .leaves = leaves, .k = k, .p = p}, seed);
  }, py::arg("model"), py::arg("n") = 0, py::arg("leaves") = 0, py::arg("k") = 0, py::arg("p") = 0.0,
     py::arg("seed") = 0);

  m.def("enumerate_connected", &enumerate_connected, py::arg("n"));
  m.def("count_connected", &count_connected, py::arg("n"));

  m.def("profile", [](const Graph& g) { return profile_dict(profile(g)); }, py::arg("graph"));
  m.def("check", &check, py::arg("graph"), py::arg("relations") = py::none());
  m.def("restricted_radiality_sum", [](const Graph& g, Vertex i) { return fraction(restricted_radiality_sum(g, i)); },
        py::arg("graph"), py::arg("i"));

  m.def("catalog", [] {
    py::list out;
    for (const auto& spec : catalog()) {
      py::dict d;
      d["id"] = std::string(relation_name(spec.id));
      d["description"] = spec.description;
      d["preconditions"] = spec.preconditions;
      d["kind"] = std::string(kind_name(spec.kind));
      d["scope"] = std::string(scope_name(spec.scope));
      out.append(d);
    }
    return out;
  });

  // Mining reports come back as the same JSON structure the command line
  // prints, with rationals as "p/q" strings.
  m.def("mine_exhaustive", [](std::size_t n_max, const std::optional<std::vector<std::string>>& relations,
                              std::size_t witness_cap, std::size_t workers) {
    const auto ids = relation_ids(relations);
    MiningReport report;
    {
      py::gil_scoped_release release;
      report = mine_exhaustive(n_max, ids, {.witness_cap = witness_cap, .workers = workers});
    }
    return from_json(to_json(report, false));
  }, py::arg("n_max"), py::arg("relations") = py::none(), py::arg("witness_cap") = 16, py::arg("workers") = 1);

  m.def("mine_random", [](const std::string& model, std::uint64_t trials, std::uint64_t seed, std::size_t n,
                          std::size_t leaves, std::size_t k, double p,
                          const std::optional<std::vector<std::string>>& relations, std::size_t witness_cap,
                          std::size_t workers) {
    const auto ids = relation_ids(relations);
    const Model mdl = model_of(model);
    MiningReport report;
    {
      py::gil_scoped_release release;
      report = mine_random(mdl, {.n = n, .leaves = leaves, .k = k, .p = p}, trials, seed, ids,
                           {.witness_cap = witness_cap, .workers = workers});
    }
    return from_json(to_json(report, false));
  }, py::arg("model"), py::arg("trials"), py::arg("seed") = 0, py::arg("n") = 0, py::arg("leaves") = 0,
     py::arg("k") = 0, py::arg("p") = 0.0, py::arg("relations") = py::none(), py::arg("witness_cap") = 16,
     py::arg("workers") = 1);

  m.def("audit_geodetic_equivalence", [](std::size_t n_max, std::size_t witness_cap) {
    return from_json(to_json(audit_geodetic_equivalence(n_max, witness_cap), false)["implication"]);
  }, py::arg("n_max"), py::arg("witness_cap") = 16);
}
