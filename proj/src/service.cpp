#include "arrangeline/service.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include <httplib.h>

namespace arrangeline {

namespace {

ApiResponse error_response(int status, std::string code, std::string message, Json witness = nullptr) {
  Json body{{"code", std::move(code)}, {"message", std::move(message)}};
  if (!witness.is_null()) body["witness"] = std::move(witness);
  return ApiResponse{status, std::move(body)};
}

ApiResponse bad_request(const std::string& message) { return error_response(400, "BAD_REQUEST", message); }

std::optional<long long> parse_integer(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    const long long v = std::stoll(text, &used);
    if (used != text.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

template <class Handler>
ApiResponse guarded(Handler&& handler) {
  try {
    return handler();
  } catch (const ParseError& e) {
    return bad_request(e.what());
  } catch (const nlohmann::json::exception& e) {
    return bad_request(e.what());
  }
}

}  // namespace

std::vector<Point> snap_to_grid(const std::vector<std::array<double, 2>>& points) {
  std::vector<Point> out(points.size());
  if (points.empty()) return out;
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  for (const auto& p : points) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1])) throw ParseError("coordinates must be finite");
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double scale = span > 0 ? static_cast<double>(kCheckGrid) / span : 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = Point{std::llround((points[i][0] - min_x) * scale), std::llround((points[i][1] - min_y) * scale)};
  }
  return out;
}

RecognizedOrError recognize_for_api(const Graph& g) {
  RecognizedOrError out;
  if (auto violation = validate_graph(g)) {
    const Json j = violation_to_json(*violation);
    out.error = error_response(422, j["code"], j["message"], j["witness"]);
    return out;
  }
  auto result = recognize(g);
  if (!result) {
    const RejectionReason& r = result.error();
    out.error = error_response(422, std::string(to_string(r.code)), r.detail, r.witness);
    return out;
  }
  out.structure = std::move(result).value();
  return out;
}

ApiResponse api_generate(const std::optional<std::string>& level, const std::optional<std::string>& seed) {
  if (!level) return bad_request("query parameter \"level\" is required");
  const auto i = parse_integer(*level);
  if (!i || *i < 1 || *i > 100) return bad_request("\"level\" must be an integer in 1..100");
  std::uint64_t s = 0;
  if (seed) {
    const auto parsed = parse_integer(*seed);
    if (!parsed || *parsed < 0) return bad_request("\"seed\" must be a non-negative integer");
    s = static_cast<std::uint64_t>(*parsed);
  }
  Json body = instance_to_json(planarity_level(static_cast<int>(*i), s));
  body["level"] = *i;
  return ApiResponse{200, std::move(body)};
}

ApiResponse api_recognize(const std::string& body) {
  return guarded([&] {
    const Graph g = graph_from_json(parse_json_text(body));
    auto rec = recognize_for_api(g);
    if (!rec.structure) return rec.error;
    return ApiResponse{200, structure_to_json(*rec.structure)};
  });
}

ApiResponse api_draw(const std::string& body) {
  return guarded([&] {
    const Json j = parse_json_text(body);
    const Graph g = graph_from_json(j);
    const bool optimize = j.value("optimizeCuts", false);
    auto rec = recognize_for_api(g);
    if (!rec.structure) return rec.error;
    const ArrangementStructure& s = *rec.structure;
    GridDrawing drawing;
    WiringDiagram diagram;
    if (optimize) {
      auto best = draw_optimized(s);
      drawing = std::move(best.drawing);
      diagram = std::move(best.diagram);
    } else {
      auto d = default_wiring(s);
      if (!d) return error_response(500, "WIRING_FAILED", d.error().detail);
      diagram = *d;
      drawing = draw(s, diagram);
    }
    Json out = drawing_to_json(drawing);
    out["cut"] = diagram.cut_index;
    out["kappa"] = level_stats(diagram).kappa;
    return ApiResponse{200, std::move(out)};
  });
}

ApiResponse api_solve_plan(const std::string& body) {
  return guarded([&] {
    const Json j = parse_json_text(body);
    const Graph g = graph_from_json(j);
    std::optional<VertexId> start;
    if (j.contains("start") && !j.at("start").is_null()) {
      const int v = j.at("start").get<int>();
      if (v < 0 || v >= g.vertex_count()) return bad_request("\"start\" is not a vertex of the graph");
      start = v;
    }
    auto rec = recognize_for_api(g);
    if (!rec.structure) return rec.error;
    return ApiResponse{200, solve_plan_to_json(solve(g, start))};
  });
}

ApiResponse api_check(const std::string& body) {
  return guarded([&] {
    const Json j = parse_json_text(body);
    if (!j.is_object() || !j.contains("positions") || !j.contains("edges")) {
      return bad_request("body needs \"positions\" and \"edges\"");
    }
    const Json& pos = j.at("positions");
    std::vector<std::array<double, 2>> raw;
    if (pos.is_array()) {
      for (const auto& p : pos) raw.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    } else if (pos.is_object()) {
      raw.assign(pos.size(), {0.0, 0.0});
      std::vector<char> seen(pos.size(), 0);
      for (const auto& [key, p] : pos.items()) {
        const auto v = parse_integer(key);
        if (!v || *v < 0 || *v >= static_cast<long long>(pos.size()) || seen[*v]) {
          return bad_request("position keys must be the vertex ids 0..n-1");
        }
        seen[*v] = 1;
        raw[*v] = {p.at(0).get<double>(), p.at(1).get<double>()};
      }
    } else {
      return bad_request("\"positions\" must be an array or an object");
    }
    GridDrawing d;
    d.positions = snap_to_grid(raw);
    const int n = static_cast<int>(d.positions.size());
    for (const auto& e : j.at("edges").get<std::vector<std::vector<int>>>()) {
      if (e.size() != 2 || e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n) {
        return bad_request("edges must be pairs of vertex ids");
      }
      d.edges.push_back({e[0], e[1]});
    }
    d.update_extent();
    Json out = crossing_report_to_json(straightline_planar(d));
    out["grid"] = kCheckGrid;
    return ApiResponse{200, std::move(out)};
  });
}

ServerOptions server_options_from_env() {
  ServerOptions opt;
  if (const char* port = std::getenv("ARRANGELINE_PORT")) {
    if (auto p = parse_integer(port); p && *p > 0 && *p < 65536) opt.port = static_cast<int>(*p);
  }
  if (const char* bind = std::getenv("ARRANGELINE_BIND")) opt.bind = bind;
  return opt;
}

struct ApiServer::Impl {
  httplib::Server server;
};

namespace {

void reply(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

ApiServer::ApiServer() : impl_(std::make_unique<Impl>()) {
  auto& srv = impl_->server;
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
  srv.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  srv.Get("/api/generate", [](const httplib::Request& req, httplib::Response& res) {
    auto param = [&](const char* key) -> std::optional<std::string> {
      if (!req.has_param(key)) return std::nullopt;
      return req.get_param_value(key);
    };
    reply(res, api_generate(param("level"), param("seed")));
  });
  srv.Post("/api/recognize", [](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_recognize(req.body));
  });
  srv.Post("/api/draw", [](const httplib::Request& req, httplib::Response& res) { reply(res, api_draw(req.body)); });
  srv.Post("/api/solve-plan", [](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_solve_plan(req.body));
  });
  srv.Post("/api/check", [](const httplib::Request& req, httplib::Response& res) { reply(res, api_check(req.body)); });
  srv.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    reply(res, error_response(res.status, "HTTP_" + std::to_string(res.status), "no such endpoint"));
  });
  srv.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    reply(res, error_response(500, "INTERNAL", what));
  });
}

ApiServer::~ApiServer() = default;

int ApiServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool ApiServer::listen() { return impl_->server.listen_after_bind(); }

void ApiServer::stop() { impl_->server.stop(); }

}  // namespace arrangeline
