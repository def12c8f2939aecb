#include "assur/json_io.hpp"

#include <fstream>

#include "assur/error.hpp"

namespace assur {

using nlohmann::json;

GraphFile graph_from_json(const json& j, bool drop_pin_pin) {
  if (!j.is_object()) raise(Errc::parse_error, "graph document must be an object");
  if (j.contains("format") && j["format"] != kFormatTag)
    raise(Errc::parse_error, "unsupported format tag");
  for (const char* key : {"dimension", "inner", "pinned", "edges"})
    if (!j.contains(key)) raise(Errc::parse_error, std::string("missing field ") + key);

  GraphFile out;
  int dim;
  std::vector<VertexId> inner, pinned;
  std::vector<Edge> edges;
  try {
    dim = j.at("dimension").get<int>();
    inner = j.at("inner").get<std::vector<VertexId>>();
    pinned = j.at("pinned").get<std::vector<VertexId>>();
    for (const auto& je : j.at("edges")) {
      edges.push_back(
          {je.at("id").get<EdgeId>(), je.at("u").get<VertexId>(), je.at("v").get<VertexId>()});
    }
    if (j.contains("coordinates"))
      out.coordinates =
          j.at("coordinates").get<std::map<VertexId, std::vector<double>>>();
  } catch (const json::exception& ex) {
    raise(Errc::parse_error, ex.what());
  }

  if (drop_pin_pin) {
    std::set<VertexId> pin_set(pinned.begin(), pinned.end());
    std::vector<Edge> kept;
    for (const Edge& e : edges) {
      if (pin_set.count(e.u) && pin_set.count(e.v))
        out.dropped_pin_pin.push_back(e);
      else
        kept.push_back(e);
    }
    edges = std::move(kept);
  }
  out.graph = PinnedGraph(dim, std::move(inner), std::move(pinned), std::move(edges));
  return out;
}

GraphFile load_graph_file(const std::string& path, bool drop_pin_pin) {
  std::ifstream in(path);
  if (!in) raise(Errc::parse_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    raise(Errc::parse_error, ex.what());
  }
  return graph_from_json(j, drop_pin_pin);
}

json graph_to_json(const PinnedGraph& g,
                   const std::map<VertexId, std::vector<double>>* coords) {
  json j;
  j["format"] = kFormatTag;
  j["dimension"] = g.dimension();
  j["inner"] = g.inner();
  j["pinned"] = g.pinned();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
  j["edges"] = edges;
  if (coords && !coords->empty()) j["coordinates"] = *coords;
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json orientation_to_json(const Orientation& o) {
  json j = json::object();
  for (const auto& [e, t] : o.tails()) j[e] = t;
  return j;
}

Orientation orientation_from_json(const json& j) {
  if (!j.is_object()) raise(Errc::parse_error, "orientation must be an object");
  std::map<EdgeId, VertexId> tails;
  for (auto it = j.begin(); it != j.end(); ++it) tails[it.key()] = it.value().get<VertexId>();
  return Orientation(std::move(tails));
}

json decomposition_to_json(const PinnedGraph& g, const Decomposition& d) {
  (void)g;
  json j;
  json comps = json::array();
  for (const auto& c : d.components)
    comps.push_back({{"inner", c.inner_vertices}, {"edges", c.edges}});
  j["components"] = comps;
  json dag = json::array();
  for (auto [up, lo] : d.dag_edges)
    dag.push_back({{"upper", up}, {"lower", lo}, {"multiplicity", d.dag_multiplicity.at({up, lo})}});
  j["dag_edges"] = dag;
  json grounds = json::array();
  for (size_t c = 0; c < d.components.size(); ++c)
    if (d.touches_ground[c]) grounds.push_back(static_cast<int>(c));
  j["ground_components"] = grounds;
  j["linear_order"] = d.linear_order;
  return j;
}

json violations_to_json(const std::vector<Violation>& vs) {
  json j = json::array();
  for (const auto& v : vs) j.push_back(violation_to_string(v));
  return j;
}

json count_violations_to_json(const std::vector<CountViolation>& vs) {
  json j = json::array();
  for (const auto& v : vs) {
    j.push_back({{"inner", v.inner},
                 {"pins", v.pins},
                 {"edge_count", v.edge_count},
                 {"bound", v.bound},
                 {"pin_count", v.pin_count},
                 {"clause", v.clause}});
  }
  return j;
}

json verdict_to_json(const AssurVerdict& v) {
  json j;
  j["isostatic"] = v.is_isostatic;
  j["assur"] = v.is_assur;
  if (v.is_strongly_assur) j["strongly_assur"] = *v.is_strongly_assur;
  if (v.is_isostatic) {
    json routes;
    routes["scc_single"] = v.routes.scc_single;
    routes["btf_single"] = v.routes.btf_single;
    if (v.routes.no_proper_isostatic_subgraph)
      routes["no_proper_isostatic_subgraph"] = *v.routes.no_proper_isostatic_subgraph;
    routes["agree"] = v.routes.agree();
    j["routes"] = routes;
    j["scc_components"] = v.scc_component_count;
    j["btf_blocks"] = v.btf_component_count;
    if (v.minimal_subgraph_component_count)
      j["minimal_components"] = *v.minimal_subgraph_component_count;
  }
  return j;
}

json motion_to_json(const MotionQ& m) {
  json j = json::object();
  for (const auto& [v, vel] : m) {
    json arr = json::array();
    for (const Rat& q : vel) arr.push_back(rat_to_string(q));
    j[v] = arr;
  }
  return j;
}

json motion_to_json(const MotionF& m) {
  json j = json::object();
  for (const auto& [v, vel] : m) j[v] = vel;
  return j;
}

json drivers_to_json(const DriverReport& r) {
  json j;
  json ds = json::array();
  for (const auto& d : r.drivers) {
    ds.push_back({{"edge", d.edge},
                  {"regular", d.regular},
                  {"moving_set", std::vector<VertexId>(d.moving_set.begin(), d.moving_set.end())}});
  }
  j["drivers"] = ds;
  json order = json::array();
  for (const auto& [a, b] : r.weak_order) order.push_back({{"below", a}, {"above", b}});
  j["weak_order"] = order;
  j["trials_disagree"] = r.trials_disagree;
  return j;
}

}  // namespace assur
