#include "odrc/serialize.hpp"

namespace odrc {
namespace {

Json ear_json(const Ear& ear, EdgeId seed_leg, bool fallback) {
  return Json{{"vertices", ear.vertices},
              {"edges", ear.edges},
              {"legs", {ear.first_leg(), ear.last_leg()}},
              {"closed", ear.closed()},
              {"length", ear.length()},
              {"seed_leg", seed_leg},
              {"fallback", fallback}};
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(std::string("color trace: missing field ") + key);
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("color trace: bad field ") + key);
  }
}

}  // namespace

Json distance_json(long long d) {
  if (d == kInf) return "inf";
  return d;
}

Json to_json(const Graph& g, const CycleCoverReport& r) {
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.m(); ++e) {
    Json item{{"u", g.edge(e).u},
              {"v", g.edge(e).v},
              {"shortest_cycle", distance_json(r.per_edge[static_cast<size_t>(e)])}};
    if (!r.witnesses.empty()) item["witness"] = r.witnesses[static_cast<size_t>(e)];
    edges.push_back(std::move(item));
  }
  return Json{{"eta", distance_json(r.eta)}, {"edges", std::move(edges)}};
}

Json to_json(const OrientTrace& t) {
  Json layers = Json::array();
  for (const auto& layer : t.layers) {
    Json ears = Json::array();
    for (const auto& te : layer.ears) {
      ears.push_back(ear_json(te.ear, te.seed_leg, te.used_fallback));
    }
    layers.push_back(Json{{"i", layer.index},
                          {"length_cap", layer.length_cap},
                          {"ears", std::move(ears)},
                          {"absorbed", layer.absorbed}});
  }
  return Json{{"center", t.center},
              {"radius", t.radius},
              {"eta", t.eta},
              {"layers", std::move(layers)},
              {"completed_edges", t.completed_edges},
              {"bounds", {{"radius", t.bounds.radius}, {"diameter", t.bounds.diameter}}},
              {"fallback_count", t.fallback_count}};
}

Json to_json(const OrientationReport& r) {
  Json j{{"strong", r.strong},
         {"directed_radius", distance_json(r.directed_radius)},
         {"directed_diameter", distance_json(r.directed_diameter)},
         {"bounds", {{"radius", r.bounds.radius}, {"diameter", r.bounds.diameter}}},
         {"radius_ok", r.radius_ok},
         {"diameter_ok", r.diameter_ok},
         {"pass", r.pass}};
  if (r.center_eccentricity) j["center_eccentricity"] = distance_json(*r.center_eccentricity);
  return j;
}

Json to_json(const ColorTrace& t) {
  Json layers = Json::array();
  for (const auto& layer : t.layers) {
    Json ears = Json::array();
    for (const auto& ce : layer.ears) {
      Json e = ear_json(ce.ear, ce.seed_leg, ce.used_fallback);
      e["colors"] = ce.colors;
      ears.push_back(std::move(e));
    }
    layers.push_back(Json{{"i", layer.index},
                          {"pool_capacity", layer.pool_capacity},
                          {"pool_alpha", layer.pool_alpha},
                          {"pool_beta", layer.pool_beta},
                          {"ears", std::move(ears)},
                          {"absorbed", layer.absorbed}});
  }
  return Json{{"center", t.center},
              {"radius", t.radius},
              {"eta", t.eta},
              {"layers", std::move(layers)},
              {"completion_color", t.completion_color},
              {"completed_edges", t.completed_edges},
              {"total_colors", t.total_colors},
              {"bound", t.bound},
              {"fallback_count", t.fallback_count}};
}

ColorTrace color_trace_from_json(const Json& j) {
  ColorTrace t;
  t.center = field<Vertex>(j, "center");
  t.radius = field<int>(j, "radius");
  t.eta = field<int>(j, "eta");
  t.completion_color = field<int>(j, "completion_color");
  t.completed_edges = field<std::vector<EdgeId>>(j, "completed_edges");
  t.total_colors = field<int>(j, "total_colors");
  t.bound = field<int>(j, "bound");
  const Json& layers = j.at("layers");
  if (!layers.is_array()) throw Error("color trace: layers must be an array");
  for (const Json& lj : layers) {
    ColorLayer layer;
    layer.index = field<int>(lj, "i");
    layer.pool_capacity = field<int>(lj, "pool_capacity");
    layer.pool_alpha = field<std::vector<int>>(lj, "pool_alpha");
    layer.pool_beta = field<std::vector<int>>(lj, "pool_beta");
    layer.absorbed = field<std::vector<Vertex>>(lj, "absorbed");
    const Json& ears = lj.at("ears");
    if (!ears.is_array()) throw Error("color trace: ears must be an array");
    for (const Json& ej : ears) {
      ColoredEar ce;
      ce.ear.vertices = field<std::vector<Vertex>>(ej, "vertices");
      ce.ear.edges = field<std::vector<EdgeId>>(ej, "edges");
      ce.colors = field<std::vector<int>>(ej, "colors");
      ce.seed_leg = field<EdgeId>(ej, "seed_leg");
      ce.used_fallback = field<bool>(ej, "fallback");
      layer.ears.push_back(std::move(ce));
    }
    t.layers.push_back(std::move(layer));
  }
  return t;
}

Json to_json(const RainbowCertificate& c) {
  return Json{{"x", c.x}, {"y", c.y}, {"path", c.path}, {"colors", c.colors}};
}

Json to_json(const TheoremReport& r) {
  const auto& s = r.graph;
  Json graph{{"n", s.n},
             {"m", s.m},
             {"rad", distance_json(s.rad)},
             {"diam", distance_json(s.diam)},
             {"eta", distance_json(s.eta)},
             {"girth", distance_json(s.girth)},
             {"min_degree", s.min_degree},
             {"bipartite", s.bipartite}};
  Json theorems = Json::array();
  for (const auto& e : r.theorems) {
    Json item{{"name", e.name},
              {"hypotheses", to_string(e.hypotheses)},
              {"bound", e.bound ? distance_json(*e.bound) : Json(nullptr)},
              {"measured", e.measured ? distance_json(*e.measured) : Json(nullptr)},
              {"status", to_string(e.status)}};
    if (!e.note.empty()) item["note"] = e.note;
    theorems.push_back(std::move(item));
  }
  return Json{{"graph", std::move(graph)}, {"theorems", std::move(theorems)}};
}

}  // namespace odrc
