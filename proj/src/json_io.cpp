#include "arrangeline/json_io.hpp"

#include <string>

namespace arrangeline {

namespace {

template <class T>
T get_as(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

Json vertex_list(const std::vector<VertexId>& v) { return Json(v); }

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const int n = get_as<int>(j, "n");
  const auto raw = get_as<std::vector<std::vector<int>>>(j, "edges");
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& pair : raw) {
    if (pair.size() != 2) throw ParseError("every edge must be a pair [u, v]");
    edges.push_back({pair[0], pair[1]});
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json structure_to_json(const ArrangementStructure& s) {
  Json lines = Json::array();
  for (const auto& p : s.pseudolines) lines.push_back(vertex_list(p.crossings));
  Json boundary = Json::array();
  for (const PathEnd& e : s.boundary) boundary.push_back({e.line, e.at_front ? "front" : "back"});
  return Json{{"l", s.line_count()},
              {"pseudolines", std::move(lines)},
              {"rotation", s.rotation.order},
              {"boundary", std::move(boundary)}};
}

ArrangementStructure structure_from_json(const Json& j, const Graph& g) {
  ArrangementStructure s;
  s.graph = g;
  const int l = get_as<int>(j, "l");
  const auto lines = get_as<std::vector<std::vector<int>>>(j, "pseudolines");
  if (static_cast<int>(lines.size()) != l) throw ParseError("\"l\" disagrees with pseudoline count");
  for (int p = 0; p < l; ++p) s.pseudolines.push_back(Pseudoline{p, lines[p]});
  s.rotation.order = get_as<std::vector<std::vector<int>>>(j, "rotation");
  if (j.contains("boundary")) {
    for (const auto& end : j.at("boundary")) {
      if (!end.is_array() || end.size() != 2) throw ParseError("boundary entries are [line, \"front\"|\"back\"]");
      s.boundary.push_back(PathEnd{end[0].get<int>(), end[1].get<std::string>() == "front"});
    }
  }
  try {
    s.membership = build_membership(g.vertex_count(), s.pseudolines);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  return s;
}

Json rejection_to_json(const RejectionReason& r) {
  return Json{{"code", std::string(to_string(r.code))}, {"message", r.detail}, {"witness", r.witness}};
}

Json violation_to_json(const GraphViolation& v) {
  std::string code;
  switch (v.kind) {
    case ViolationKind::SelfLoop: code = "SELF_LOOP"; break;
    case ViolationKind::MultiEdge: code = "MULTI_EDGE"; break;
    case ViolationKind::DegreeTooHigh: code = "BAD_DEGREE"; break;
    case ViolationKind::Disconnected: code = "DISCONNECTED"; break;
  }
  return Json{{"code", code}, {"message", v.message}, {"witness", v.witness}};
}

Json diagram_to_json(const WiringDiagram& d) {
  Json crossings = Json::array();
  for (const Crossing& c : d.crossings) crossings.push_back({c.vertex, c.level});
  return Json{{"l", d.l}, {"initial", d.initial_tracks}, {"crossings", std::move(crossings)}};
}

WiringDiagram diagram_from_json(const Json& j) {
  WiringDiagram d;
  d.l = get_as<int>(j, "l");
  d.initial_tracks = get_as<std::vector<int>>(j, "initial");
  if (static_cast<int>(d.initial_tracks.size()) != d.l) throw ParseError("\"initial\" must list l tracks");
  for (const auto& c : get_as<std::vector<std::vector<int>>>(j, "crossings")) {
    if (c.size() != 2) throw ParseError("crossings are [vertex, level] pairs");
    if (c[1] < 1 || c[1] >= d.l) throw ParseError("crossing level out of range");
    d.crossings.push_back(Crossing{c[0], c[1]});
  }
  return d;
}

Json level_stats_to_json(const LevelStats& st) { return Json{{"sizes", st.sizes}, {"kappa", st.kappa}}; }

Json drawing_to_json(const GridDrawing& d) {
  Json positions = Json::object();
  for (std::size_t v = 0; v < d.positions.size(); ++v) {
    positions[std::to_string(v)] = {d.positions[v].x, d.positions[v].y};
  }
  Json edges = Json::array();
  for (const Edge& e : d.edges) edges.push_back({e.u, e.v});
  return Json{{"width", d.width}, {"height", d.height}, {"positions", std::move(positions)}, {"edges", std::move(edges)}};
}

namespace {

Point lattice_point(const Json& value) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() || !value[1].is_number_integer()) {
    throw ParseError("positions are [x, y] integer pairs");
  }
  return Point{value[0].get<std::int64_t>(), value[1].get<std::int64_t>()};
}

}  // namespace

GridDrawing drawing_from_json(const Json& j) {
  GridDrawing d;
  if (!j.is_object() || !j.contains("positions")) throw ParseError("missing key \"positions\"");
  const Json& pos = j.at("positions");
  try {
    if (pos.is_object()) {
      d.positions.assign(pos.size(), Point{0, 0});
      std::vector<char> seen(pos.size(), 0);
      for (const auto& [key, value] : pos.items()) {
        std::size_t used = 0;
        const int v = std::stoi(key, &used);
        if (used != key.size() || v < 0 || v >= static_cast<int>(pos.size()) || seen[v]) {
          throw ParseError("position keys must be the vertex ids 0..n-1");
        }
        seen[v] = 1;
        d.positions[v] = lattice_point(value);
      }
    } else if (pos.is_array()) {
      for (const auto& value : pos) {
        d.positions.push_back(lattice_point(value));
      }
    } else {
      throw ParseError("\"positions\" must be an object or an array");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad position: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError("position keys must be the vertex ids 0..n-1");
  }
  if (j.contains("edges")) {
    for (const auto& e : get_as<std::vector<std::vector<int>>>(j, "edges")) {
      if (e.size() != 2) throw ParseError("every edge must be a pair [u, v]");
      const int n = static_cast<int>(d.positions.size());
      if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n) throw ParseError("edge names unknown vertex");
      d.edges.push_back({e[0], e[1]});
    }
  }
  d.update_extent();
  return d;
}

Json point_set_to_json(const UniversalPointSet& ups, bool with_points) {
  Json j{{"l", ups.l},
         {"s", ups.s},
         {"widthCap", ups.width_cap},
         {"rows", ups.row_counts},
         {"pointCount", ups.point_count()}};
  if (with_points) {
    Json pts = Json::array();
    for (const Point& p : ups.points()) pts.push_back({p.x, p.y});
    j["points"] = std::move(pts);
  }
  return j;
}

Json solve_plan_to_json(const GreedySolution& solution) {
  Json ears = Json::array();
  for (const EarStep& e : solution.ears) {
    ears.push_back(Json{{"u", e.u}, {"v", e.v}, {"P", e.boundary_path}, {"S", e.shortest_path}});
  }
  return Json{{"initialCycle", solution.initial_cycle}, {"ears", std::move(ears)}};
}

Json instance_to_json(const GeneratedInstance& inst) {
  Json j = graph_to_json(inst.graph);
  j["l"] = inst.l;
  j["seed"] = inst.lines.seed;
  Json lines = Json::array();
  for (const Line& ln : inst.lines.lines) lines.push_back({ln.a, ln.b, ln.c});
  j["lines"] = std::move(lines);
  Json layout = Json::array();
  for (const auto& p : inst.layout) layout.push_back({p[0], p[1]});
  j["layout"] = std::move(layout);
  return j;
}

Json crossing_report_to_json(const CrossingReport& report) {
  Json crossings = Json::array();
  for (auto [a, b] : report.edge_pairs) crossings.push_back({a, b});
  Json on_edge = Json::array();
  for (auto [v, e] : report.vertex_on_edge) on_edge.push_back({v, e});
  Json coincident = Json::array();
  for (auto [a, b] : report.coincident) coincident.push_back({a, b});
  return Json{{"crossings", std::move(crossings)},
              {"vertexOnEdge", std::move(on_edge)},
              {"coincident", std::move(coincident)},
              {"planar", report.planar()}};
}

}  // namespace arrangeline
