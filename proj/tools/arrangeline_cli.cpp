// arrangeline: command-line front end. JSON (or SVG) goes to stdout,
// diagnostics to stderr. Exit 0 ok, 1 domain rejection, 2 usage error.

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arrangeline/json_io.hpp"
#include "arrangeline/service.hpp"

namespace al = arrangeline;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

al::Json read_json(const std::string& path) {
  try {
    return al::parse_json_text(read_input(path));
  } catch (const al::ParseError& e) {
    throw UsageError(e.what());
  }
}

al::Graph read_graph(const std::string& path) {
  try {
    return al::graph_from_json(read_json(path));
  } catch (const al::ParseError& e) {
    throw UsageError(e.what());
  }
}

void emit(const al::Json& j) { std::cout << j.dump() << '\n'; }

// Prints the rejection on stdout (the artifact) and a one-line note on stderr.
int reject(const al::Json& error) {
  std::cerr << "rejected: " << error.value("code", "") << ": " << error.value("message", "") << '\n';
  emit(error);
  return kRejected;
}

std::optional<al::ArrangementStructure> recognize_or_report(const al::Graph& g, int& status) {
  auto rec = al::recognize_for_api(g);
  if (!rec.structure) status = reject(rec.error.body);
  return std::move(rec.structure);
}

al::ApiServer* g_server = nullptr;

void handle_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudoline arrangement graphs: recognition, grid drawings, universal point sets."};
  app.require_subcommand(1);

  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "Graph JSON file (default: stdin)");
  };

  int lines = 0;
  std::uint64_t seed = 0;
  std::optional<int> level;
  auto* generate = app.add_subcommand("generate", "Random line arrangement graph with a tangled layout");
  auto* lines_opt = generate->add_option("--lines", lines, "Number of lines (>= 2)")->check(CLI::Range(2, 2000));
  generate->add_option("--seed", seed, "64-bit seed");
  generate->add_option("--level", level, "Puzzle level i (uses i+3 lines)")->check(CLI::Range(1, 1000));
  generate->callback([&] {
    if (!level && lines_opt->count() == 0) throw CLI::RequiredError("--lines or --level");
  });

  auto* recognize_cmd = app.add_subcommand("recognize", "Recognize an arrangement graph");
  add_input(recognize_cmd);

  bool optimize_cuts = false, svg = false;
  std::optional<int> cut;
  int scale = 40;
  std::int64_t stretch = 1;
  auto* draw_cmd = app.add_subcommand("draw", "Grid drawing of an arrangement graph");
  add_input(draw_cmd);
  auto* optimize_opt = draw_cmd->add_flag("--optimize-cuts", optimize_cuts, "Minimum width over all valid cuts");
  draw_cmd->add_option("--cut", cut, "Cut index in 0..2l-1")->excludes(optimize_opt);
  draw_cmd->add_flag("--svg", svg, "Emit SVG instead of JSON");
  draw_cmd->add_option("--scale", scale, "SVG pixels per cell")->check(CLI::Range(1, 10000));
  draw_cmd->add_option("--stretch", stretch, "Horizontal stretch factor")->check(CLI::Range(1, 1 << 20));

  int upset_l = 0;
  std::optional<std::int64_t> cap;
  bool with_points = false;
  std::string embed_path;
  auto* upset = app.add_subcommand("upset", "Universal point set for l pseudolines");
  upset->add_option("--l", upset_l, "Number of pseudolines (>= 3)")->required()->check(CLI::Range(3, 100000));
  upset->add_option("--cap", cap, "Row width cap W (default ceil(2 l^(4/3)))");
  upset->add_flag("--points", with_points, "Include the point list");
  upset->add_flag("--svg", svg, "Emit an SVG scatter of the points");
  upset->add_option("--embed", embed_path, "Drawing JSON to place onto the point set");

  std::optional<int> start;
  auto* solve_cmd = app.add_subcommand("solve-greedy", "Greedy ear decomposition (canonical embedding)");
  add_input(solve_cmd);
  solve_cmd->add_option("--start", start, "Start vertex (default 0)");

  auto* stats = app.add_subcommand("stats", "Level sizes and kappa of a wiring diagram");
  add_input(stats);
  stats->add_option("--cut", cut, "Cut index (default: smallest valid)");

  std::string drawing_path, graph_path;
  auto* verify_cmd = app.add_subcommand("verify", "Exact straight-line planarity check of a drawing");
  verify_cmd->add_option("--drawing", drawing_path, "Drawing JSON")->required();
  verify_cmd->add_option("--graph", graph_path, "Graph JSON supplying the edges");

  al::ServerOptions server = al::server_options_from_env();
  auto* serve = app.add_subcommand("serve", "HTTP/JSON API");
  serve->add_option("--port", server.port, "Port (env ARRANGELINE_PORT, default 8080)")->check(CLI::Range(0, 65535));
  serve->add_option("--bind", server.bind, "Bind address (env ARRANGELINE_BIND)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate) {
      al::GeneratedInstance inst = level ? al::planarity_level(*level, seed) : al::random_lines(lines, seed);
      al::Json j = al::instance_to_json(inst);
      if (level) j["level"] = *level;
      emit(j);
      return kOk;
    }

    if (*recognize_cmd) {
      int status = kOk;
      auto s = recognize_or_report(read_graph(input), status);
      if (s) emit(al::structure_to_json(*s));
      return status;
    }

    if (*draw_cmd) {
      int status = kOk;
      auto s = recognize_or_report(read_graph(input), status);
      if (!s) return status;
      const al::DrawOptions opts{stretch};
      al::WiringDiagram diagram;
      al::GridDrawing drawing;
      if (optimize_cuts) {
        auto best = al::draw_optimized(*s, opts);
        diagram = std::move(best.diagram);
        drawing = std::move(best.drawing);
      } else {
        auto oriented = al::choose_cut(*s, cut.value_or(al::valid_cuts(*s).front()));
        if (!oriented) throw UsageError(oriented.error().detail);
        auto d = al::build_wiring(*oriented);
        if (!d) throw std::runtime_error(d.error().detail);
        diagram = std::move(*d);
        drawing = al::draw(*s, diagram, opts);
      }
      if (svg) {
        std::cout << al::to_svg(drawing, scale);
      } else {
        al::Json j = al::drawing_to_json(drawing);
        j["cut"] = diagram.cut_index;
        j["kappa"] = al::level_stats(diagram).kappa;
        emit(j);
      }
      return kOk;
    }

    if (*upset) {
      al::UniversalPointSet ups;
      try {
        ups = al::universal_points(upset_l, cap);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!embed_path.empty()) {
        al::GridDrawing d;
        try {
          d = al::drawing_from_json(read_json(embed_path));
        } catch (const al::ParseError& e) {
          throw UsageError(e.what());
        }
        auto placed = al::embed_on(d, ups);
        if (!placed) {
          return reject(al::Json{{"code", "EMBED_FAILED"}, {"message", placed.error().detail}});
        }
        if (svg) {
          std::cout << al::to_svg(*placed, scale);
        } else {
          emit(al::drawing_to_json(*placed));
        }
        return kOk;
      }
      if (svg) {
        al::GridDrawing scatter;
        scatter.positions = ups.points();
        scatter.update_extent();
        std::cout << al::to_svg(scatter, scale);
      } else {
        emit(al::point_set_to_json(ups, with_points));
      }
      return kOk;
    }

    if (*solve_cmd) {
      const al::Graph g = read_graph(input);
      if (start && (*start < 0 || *start >= g.vertex_count())) throw UsageError("--start is not a vertex");
      int status = kOk;
      if (!recognize_or_report(g, status)) return status;
      emit(al::solve_plan_to_json(al::solve(g, start)));
      return kOk;
    }

    if (*stats) {
      int status = kOk;
      auto s = recognize_or_report(read_graph(input), status);
      if (!s) return status;
      const auto cuts = al::valid_cuts(*s);
      auto oriented = al::choose_cut(*s, cut.value_or(cuts.front()));
      if (!oriented) throw UsageError(oriented.error().detail);
      auto d = al::build_wiring(*oriented);
      if (!d) throw std::runtime_error(d.error().detail);
      al::Json j = al::level_stats_to_json(al::level_stats(*d));
      j["l"] = s->line_count();
      j["n"] = s->graph.vertex_count();
      j["m"] = s->graph.edge_count();
      j["cut"] = d->cut_index;
      j["validCuts"] = cuts;
      emit(j);
      return kOk;
    }

    if (*verify_cmd) {
      al::GridDrawing d;
      try {
        d = al::drawing_from_json(read_json(drawing_path));
        if (!graph_path.empty()) {
          const al::Graph g = al::graph_from_json(read_json(graph_path));
          if (g.vertex_count() != static_cast<int>(d.positions.size())) {
            throw UsageError("graph and drawing disagree on the vertex count");
          }
          d.edges = g.edges();
        }
      } catch (const al::ParseError& e) {
        throw UsageError(e.what());
      }
      const al::CrossingReport report = al::straightline_planar(d);
      emit(al::crossing_report_to_json(report));
      if (!report.planar()) {
        std::cerr << "drawing is not straight-line planar\n";
        return kRejected;
      }
      return kOk;
    }

    if (*serve) {
      al::ApiServer api;
      const int port = api.bind(server.bind, server.port);
      if (port < 0) {
        std::cerr << "cannot bind " << server.bind << ':' << server.port << '\n';
        return kUsage;
      }
      g_server = &api;
      std::signal(SIGINT, handle_signal);
      std::signal(SIGTERM, handle_signal);
      std::cerr << "listening on " << server.bind << ':' << port << '\n';
      api.listen();
      g_server = nullptr;
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const al::GeneratorError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRejected;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kRejected;
  }
  return kUsage;
}
