#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include <httplib.h>

#include "arrangeline/service.hpp"
#include "support.hpp"

using namespace arrangeline;

namespace {

std::string graph_body(const Graph& g, Json extra = Json::object()) {
  Json j = graph_to_json(g);
  j.update(extra);
  return j.dump();
}

}  // namespace

TEST_CASE("generate") {
  const auto r = api_generate(std::string("1"), std::string("7"));
  CHECK(r.status == 200);
  CHECK(r.body.at("n") == 6);
  CHECK(r.body.at("edges").size() == 8);
  CHECK(r.body.at("level") == 1);
  CHECK(r.body.at("seed") == 7);
  CHECK(api_generate(std::string("4"), std::string("0")).body.at("n") == 21);
  CHECK(api_generate(std::string("2"), std::string("5")).body == api_generate(std::string("2"), std::string("5")).body);
  CHECK(api_generate(std::string("2"), std::nullopt).body.at("seed") == 0);
}

TEST_CASE("generate rejects bad parameters") {
  for (const auto& [level, seed] : std::vector<std::pair<std::optional<std::string>, std::optional<std::string>>>{
           {std::nullopt, std::nullopt},
           {"0", "1"},
           {"101", "1"},
           {"x", "1"},
           {"2.5", "1"},
           {"2", "-3"},
           {"2", "seed"}}) {
    const auto r = api_generate(level, seed);
    CHECK(r.status == 400);
    CHECK(r.body.at("code") == "BAD_REQUEST");
    CHECK(r.body.at("message").is_string());
  }
}

TEST_CASE("recognize") {
  const auto ok = api_recognize(graph_body(oracle::triangle()));
  CHECK(ok.status == 200);
  CHECK(ok.body.at("l") == 3);
  CHECK(ok.body.at("pseudolines").size() == 3);

  const auto k5 = api_recognize(graph_body(oracle::complete(5)));
  CHECK(k5.status == 422);
  CHECK(k5.body.at("code") == "NOT_PLANAR");
  const auto multi = api_recognize(graph_body(oracle::make_graph(3, {{0, 1}, {0, 1}, {1, 2}})));
  CHECK(multi.status == 422);
  CHECK(multi.body.at("code") == "MULTI_EDGE");

  CHECK(api_recognize("not json").status == 400);
  CHECK(api_recognize("{\"n\": 2}").status == 400);
  CHECK(api_recognize("{\"n\": 2, \"edges\": [[0, 5]]}").status == 400);
}

TEST_CASE("draw") {
  const Graph g = planarity_level(4, 3).graph;
  const auto plain = api_draw(graph_body(g));
  REQUIRE(plain.status == 200);
  CHECK(plain.body.at("height") == 6);
  CHECK(plain.body.at("positions").size() == 21);
  CHECK(plain.body.at("edges").size() == 35);
  const auto opt = api_draw(graph_body(g, {{"optimizeCuts", true}}));
  REQUIRE(opt.status == 200);
  CHECK(opt.body.at("width") <= plain.body.at("width"));
  CHECK(opt.body.at("width") == opt.body.at("kappa"));
  const auto drawing = drawing_from_json(opt.body);
  CHECK(oracle::drawing_is_planar(drawing.positions, drawing.edges));
  CHECK(api_draw(graph_body(oracle::complete(4))).status == 422);
  CHECK(api_draw(graph_body(g, {{"optimizeCuts", "yes"}})).status == 400);
}

TEST_CASE("solve-plan") {
  for (int i = 1; i <= 4; ++i) {
    const auto inst = planarity_level(i, 10 + i);
    const int l = i + 3;
    const auto r = api_solve_plan(graph_body(inst.graph));
    REQUIRE(r.status == 200);
    CHECK(r.body.at("ears").size() == static_cast<std::size_t>((l - 1) * (l - 2) / 2 - 1));
    CHECK(r.body.at("initialCycle").size() >= 3);
  }
  const Graph g = planarity_level(2, 1).graph;
  const auto started = api_solve_plan(graph_body(g, {{"start", 4}}));
  REQUIRE(started.status == 200);
  CHECK(started.body.at("initialCycle")[0] == 4);
  CHECK(api_solve_plan(graph_body(g, {{"start", 99}})).status == 400);
  CHECK(api_solve_plan(graph_body(g, {{"start", "a"}})).status == 400);
  CHECK(api_solve_plan(graph_body(oracle::cycle(6))).status == 422);
}

TEST_CASE("check") {
  const auto planar = api_check(R"({"positions": [[0, 0], [1, 0], [0, 1]], "edges": [[0, 1], [1, 2], [2, 0]]})");
  CHECK(planar.status == 200);
  CHECK(planar.body.at("crossings") == Json::array());
  CHECK(planar.body.at("planar") == true);
  CHECK(planar.body.at("grid") == kCheckGrid);

  const auto x = api_check(R"({"positions": {"0": [0, 0], "1": [2, 2], "2": [0, 2], "3": [2, 0]},
                              "edges": [[0, 1], [2, 3]]})");
  CHECK(x.body.at("crossings") == Json{{0, 1}});
  CHECK(x.body.at("planar") == false);

  // A vertex dragged onto an edge interior counts, even with float noise far
  // below the grid resolution.
  const auto on = api_check(R"({"positions": [[0, 0], [10, 0], [5.0000000001, 0]], "edges": [[0, 1]]})");
  CHECK(on.body.at("vertexOnEdge") == Json{{2, 0}});

  CHECK(api_check(R"({"positions": [[0, 0]]})").status == 400);
  CHECK(api_check(R"({"positions": [[0, 0], [1, 1]], "edges": [[0, 2]]})").status == 400);
  CHECK(api_check(R"({"positions": {"0": [0, 0], "5": [1, 1]}, "edges": []})").status == 400);
  CHECK(api_check(R"({"positions": 3, "edges": []})").status == 400);
  CHECK(api_check(R"({"positions": [["a", 0]], "edges": []})").status == 400);
}

TEST_CASE("snapping") {
  const auto s = snap_to_grid({{-1.0, 2.0}, {3.0, 2.0}, {1.0, 3.0}});
  CHECK(s[0] == Point{0, 0});
  CHECK(s[1] == Point{kCheckGrid, 0});
  CHECK(s[2] == Point{kCheckGrid / 2, kCheckGrid / 4});
  CHECK(snap_to_grid({{5.0, 5.0}}) == std::vector<Point>{{0, 0}});
  CHECK(snap_to_grid({}).empty());
  CHECK_THROWS_AS(snap_to_grid({{0.0, std::numeric_limits<double>::quiet_NaN()}}), ParseError);
  CHECK_THROWS_AS(snap_to_grid({{std::numeric_limits<double>::infinity(), 0.0}}), ParseError);
  // Snapping is invariant under translation and uniform scaling.
  const auto a = snap_to_grid({{0.1, 0.7}, {0.4, 0.2}, {0.9, 0.35}});
  const auto b = snap_to_grid({{100.2, 101.4}, {100.8, 100.4}, {101.8, 100.7}});
  CHECK(a == b);
}

TEST_CASE("server options from the environment") {
  ::unsetenv("ARRANGELINE_PORT");
  ::unsetenv("ARRANGELINE_BIND");
  CHECK(server_options_from_env().port == 8080);
  CHECK(server_options_from_env().bind == "0.0.0.0");
  ::setenv("ARRANGELINE_PORT", "9123", 1);
  ::setenv("ARRANGELINE_BIND", "127.0.0.1", 1);
  CHECK(server_options_from_env().port == 9123);
  CHECK(server_options_from_env().bind == "127.0.0.1");
  ::setenv("ARRANGELINE_PORT", "http", 1);
  CHECK(server_options_from_env().port == 8080);
  ::unsetenv("ARRANGELINE_PORT");
  ::unsetenv("ARRANGELINE_BIND");
}

TEST_CASE("http server end to end") {
  ApiServer server;
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen(); });
  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);

  const auto gen = client.Get("/api/generate?level=1&seed=7");
  REQUIRE(gen);
  CHECK(gen->status == 200);
  CHECK(gen->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(gen->get_header_value("Content-Type") == "application/json");
  const Json g = Json::parse(gen->body);
  CHECK(g.at("n") == 6);
  CHECK(g.at("edges").size() == 8);

  const auto graph = Json{{"n", g.at("n")}, {"edges", g.at("edges")}}.dump();
  const auto rec = client.Post("/api/recognize", graph, "application/json");
  REQUIRE(rec);
  CHECK(rec->status == 200);
  CHECK(Json::parse(rec->body).at("l") == 4);

  const auto plan = client.Post("/api/solve-plan", graph, "application/json");
  REQUIRE(plan);
  CHECK(Json::parse(plan->body).at("ears").size() == 2);

  const auto drawn = client.Post("/api/draw", graph, "application/json");
  REQUIRE(drawn);
  const Json d = Json::parse(drawn->body);
  Json check{{"positions", d.at("positions")}, {"edges", d.at("edges")}};
  const auto checked = client.Post("/api/check", check.dump(), "application/json");
  REQUIRE(checked);
  CHECK(Json::parse(checked->body).at("crossings") == Json::array());

  const auto bad = client.Post("/api/recognize", "{", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(Json::parse(bad->body).at("code") == "BAD_REQUEST");

  const auto missing = client.Get("/api/nothing");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  CHECK(Json::parse(missing->body).at("code") == "HTTP_404");

  const auto pre = client.Options("/api/check");
  REQUIRE(pre);
  CHECK(pre->status == 204);
  CHECK(pre->get_header_value("Access-Control-Allow-Methods").find("POST") != std::string::npos);

  server.stop();
  worker.join();
}
