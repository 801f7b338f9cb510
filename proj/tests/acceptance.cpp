// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "arrangeline/generators.hpp"
#include "arrangeline/greedy_solver.hpp"
#include "arrangeline/grid_draw.hpp"
#include "arrangeline/recognizer.hpp"
#include "arrangeline/universal_points.hpp"
#include "arrangeline/verify.hpp"
#include "arrangeline/wiring.hpp"
#include "support.hpp"

using namespace arrangeline;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages.
struct Failures {
  int count = 0;
  std::ostringstream first;
  void add(const std::string& what) {
    if (count++ < 3) first << (count > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& ok_detail) const {
    if (count == 0) return {true, ok_detail};
    return {false, std::to_string(count) + " failures: " + first.str()};
  }
};

bool rejected(const Graph& g) { return validate_graph(g).has_value() || !recognize(g).has_value(); }

std::int64_t lemma4_sum(const GridDrawing& d, int l) {
  std::vector<std::int64_t> rows(static_cast<std::size_t>(d.height), 0);
  for (const Point& p : d.positions) ++rows[static_cast<std::size_t>(p.y)];
  std::int64_t sum = 0;
  for (auto n : rows) sum += (n + l - 1) / l;
  return sum;
}

// Shared across criteria: every drawing produced is checked against the row
// bound on its way through.
Failures lemma4_failures;
long lemma4_checked = 0;

void note_drawing(const GridDrawing& d, int l) {
  ++lemma4_checked;
  const std::int64_t bound = (3 * (l - 1) + 1) / 2;
  if (lemma4_sum(d, l) > bound) lemma4_failures.add("l=" + std::to_string(l) + " row sum over bound");
}

Outcome round_trip() {
  Failures f;
  const auto t0 = std::chrono::steady_clock::now();
  int runs = 0;
  for (int l = 3; l <= 30; ++l) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ++runs;
      const auto inst = random_lines(l, seed);
      const auto s = recognize(inst.graph);
      const std::string tag = "l=" + std::to_string(l) + " seed=" + std::to_string(seed);
      if (!s) {
        f.add(tag + " rejected");
        continue;
      }
      if (s->line_count() != l) f.add(tag + " wrong pseudoline count");
      if (s->graph.vertex_count() != l * (l - 1) / 2) f.add(tag + " wrong n");
      if (s->graph.edge_count() != l * (l - 2)) f.add(tag + " wrong m");
      if (!same_pseudolines(s->pseudolines, inst.ground_truth)) f.add(tag + " pseudolines differ");
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 10.0) f.add("took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << runs << " instances, " << secs << " s";
  return f.outcome(d.str());
}

Outcome mutation() {
  Failures f;
  long mutants = 0;
  for (int l : {4, 5}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = random_lines(l, seed).graph;
      const int n = g.vertex_count();
      std::set<std::pair<int, int>> present;
      for (const Edge& e : g.edges()) present.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
      for (int drop = 0; drop < g.edge_count(); ++drop) {
        std::vector<Edge> edges = g.edges();
        edges.erase(edges.begin() + drop);
        ++mutants;
        if (!rejected(Graph(n, edges))) f.add("deletion accepted");
      }
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (present.count({u, v})) continue;
          std::vector<Edge> edges = g.edges();
          edges.push_back({u, v});
          ++mutants;
          if (!rejected(Graph(n, edges))) f.add("insertion accepted");
        }
      }
    }
  }
  return f.outcome(std::to_string(mutants) + " mutants rejected");
}

Outcome dimensions() {
  Failures f;
  long drawings = 0;
  for (int l = 3; l <= 40; ++l) {
    const std::uint64_t seeds = l <= 15 ? 5 : 2;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
      const auto s = recognize(random_lines(l, 1000 + seed).graph).value();
      auto cuts = valid_cuts(s);
      if (l > 15) cuts.resize(std::min<std::size_t>(cuts.size(), 2));
      for (int c : cuts) {
        const auto d = build_wiring(choose_cut(s, c).value()).value();
        const auto g = draw(s, d);
        ++drawings;
        note_drawing(g, l);
        const std::string tag = "l=" + std::to_string(l) + " cut=" + std::to_string(c);
        if (g.height != l - 1) f.add(tag + " height");
        if (g.width != level_stats(d).kappa) f.add(tag + " width");
        if (!straightline_planar(g).planar()) f.add(tag + " not planar");
      }
    }
  }
  // Seven-line instances: height 6 always, width 5 for some cut.
  bool width5 = false;
  std::string where;
  for (std::uint64_t seed = 0; seed < 100 && !width5; ++seed) {
    const auto s = recognize(planarity_level(4, seed).graph).value();
    for (int c : valid_cuts(s)) {
      const auto g = draw(s, build_wiring(choose_cut(s, c).value()).value());
      note_drawing(g, 7);
      if (g.height != 6) f.add("seven lines: height " + std::to_string(g.height));
      if (g.width == 5 && !width5) {
        width5 = true;
        where = "seed " + std::to_string(seed) + " cut " + std::to_string(c);
      }
    }
  }
  if (!width5) f.add("no 6x5 drawing among seven-line instances");
  return f.outcome(std::to_string(drawings) + " drawings; 6x5 at " + where);
}

Outcome area() {
  Failures f;
  double worst_ratio = 0;
  int worst_l = 0;
  std::vector<int> over_cap;
  for (int l = 10; l <= 60; ++l) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto s = recognize(random_lines(l, 77 + seed).graph).value();
      const auto g = draw(s, default_wiring(s).value());
      note_drawing(g, l);
      const double cap = std::pow(static_cast<double>(l), 4.0 / 3.0);
      const double ratio = static_cast<double>(g.width) / cap;
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst_l = l;
      }
      if (g.width > 2.0 * cap) over_cap.push_back(l);
      const double n = s.graph.vertex_count();
      if (static_cast<double>(g.width * g.height) > 4.0 * std::pow(n, 7.0 / 6.0)) {
        f.add("l=" + std::to_string(l) + " area " + std::to_string(g.width * g.height));
      }
    }
  }
  for (int l : over_cap) std::cout << "NOTE  area: width above 2 l^(4/3) at l=" << l << '\n';
  std::ostringstream d;
  d << "max width/l^(4/3) = " << worst_ratio << " at l=" << worst_l << ", " << over_cap.size()
    << " above the 2 l^(4/3) cap";
  return f.outcome(d.str());
}

Outcome xi_machinery() {
  Failures f;
  // The listing printed for the sequence.
  const std::uint64_t listing[] = {1, 3, 1, 7, 1, 3, 1, 15, 1, 3, 1, 7, 1, 3, 1};
  for (std::uint64_t i = 1; i <= 15; ++i)
    if (xi(i) != listing[i - 1]) f.add("xi(" + std::to_string(i) + ")");
  std::uint64_t running = 0;
  for (std::uint64_t s = 1; s <= 100'000; ++s) {
    running += (std::uint64_t{2} << std::countr_zero(s)) - 1;
    if (xi_prefix_sum(s) != running) f.add("prefix sum at " + std::to_string(s));
    const double sl = static_cast<double>(s) * std::log2(static_cast<double>(s));
    const double sum = static_cast<double>(running);
    if (sum < sl - 2.0 * s || sum > sl + static_cast<double>(s)) f.add("bounds at s=" + std::to_string(s));
  }
  // Row bound on every drawing produced by the other criteria.
  if (lemma4_failures.count > 0) f.add("row bound: " + lemma4_failures.first.str());
  return f.outcome("xi listing, bounds for s <= 100000, row bound on " + std::to_string(lemma4_checked) +
                   " drawings");
}

Outcome universality() {
  Failures f;
  long embedded = 0;
  for (int l = 3; l <= 15; ++l) {
    const auto ups = universal_points(l);
    const double s = ups.s;
    if (static_cast<double>(ups.point_count()) > l * (s * std::log2(s) + s)) f.add("l=" + std::to_string(l) + " too many points");
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto st = recognize(random_lines(l, 5000 + seed).graph).value();
      const auto g = draw(st, default_wiring(st).value());
      note_drawing(g, l);
      const auto e = embed_on(g, ups);
      const std::string tag = "l=" + std::to_string(l) + " seed=" + std::to_string(seed);
      if (!e) {
        f.add(tag + ": " + e.error().detail);
        continue;
      }
      ++embedded;
      bool inside = true;
      for (const Point& p : e->positions) inside = inside && ups.contains(p);
      if (!inside) f.add(tag + " left the point set");
      if (!straightline_planar(*e).planar() || !oracle::drawing_is_planar(e->positions, e->edges)) {
        f.add(tag + " not planar");
      }
    }
  }
  return f.outcome(std::to_string(embedded) + " drawings embedded");
}

Outcome matching() {
  Failures f;
  long sequences = 0;
  std::vector<std::int64_t> parts;
  std::function<void(int, int)> rec = [&](int left, int s) {
    if (left == 0) {
      ++sequences;
      const auto m = match_rows(parts, s);
      if (!m) {
        f.add("no match with s=" + std::to_string(s));
        return;
      }
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (static_cast<std::int64_t>(xi(m->assigned_rows[k])) < parts[k]) f.add("row too small");
        if (k && m->assigned_rows[k] <= m->assigned_rows[k - 1]) f.add("rows not increasing");
        if (m->assigned_rows[k] > s) f.add("row beyond s");
      }
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p, s);
      parts.pop_back();
    }
  };
  for (int s = 1; s <= 20; ++s) rec(s, s);
  return f.outcome(std::to_string(sequences) + " sequences");
}

Outcome greedy() {
  Failures f;
  long runs = 0, brute = 0;
  for (int l = 3; l <= 12; ++l) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      ++runs;
      const auto inst = random_lines(l, seed);
      const auto s = recognize(inst.graph).value();
      const auto canon = faces_of(s.graph, s.rotation);
      const std::string tag = "l=" + std::to_string(l) + " seed=" + std::to_string(seed);
      try {
        const auto sol = solve(inst.graph);
        if (!same_face_set(sol.faces, canon)) f.add(tag + " face set differs");
        if (sol.ears.size() != static_cast<std::size_t>((l - 1) * (l - 2) / 2 - 1)) f.add(tag + " ear count");
      } catch (const std::exception& e) {
        f.add(tag + " threw: " + e.what());
      }
      std::set<std::vector<VertexId>> faces;
      for (Face face : canon) {
        std::sort(face.begin(), face.end());
        faces.insert(face);
      }
      auto is_face = [&](std::vector<VertexId> c) {
        std::sort(c.begin(), c.end());
        return faces.count(c) > 0;
      };
      const int n = inst.graph.vertex_count();
      for (VertexId v = 0; v < n; ++v) {
        const auto c = shortest_cycle_through(inst.graph, v);
        if (!is_face(c)) f.add(tag + " shortest cycle not a face");
        if (n > 15) continue;
        ++brute;
        const auto all = enumerate_cycles_through(inst.graph, v, n);
        std::size_t best = n + 1;
        for (const auto& x : all) best = std::min(best, x.size());
        if (c.size() != best) f.add(tag + " cycle not minimal");
        for (const auto& x : all)
          if (x.size() == best && !is_face(x)) f.add(tag + " a minimum cycle is not a face");
      }
    }
  }
  return f.outcome(std::to_string(runs) + " instances, " + std::to_string(brute) + " brute-force vertex checks");
}

#ifndef ARRANGELINE_CLI_PATH
#define ARRANGELINE_CLI_PATH "arrangeline"
#endif

std::string run_capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = ::pclose(pipe);
  return out;
}

Outcome determinism() {
  Failures f;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("arrangeline-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = std::string("\"") + ARRANGELINE_CLI_PATH + "\"";
  int status = 0;
  const std::string instance = run_capture(cli + " generate --level 4 --seed 11", status);
  if (status != 0 || instance.empty()) {
    fs::remove_all(dir);
    f.add("generate failed");
    return f.outcome("");
  }
  const fs::path graph = dir / "graph.json";
  std::ofstream(graph) << instance;
  const std::string in = " -i \"" + graph.string() + "\"";
  const std::vector<std::string> commands = {
      cli + " generate --level 4 --seed 11",
      cli + " generate --lines 12 --seed 3",
      cli + " recognize" + in,
      cli + " draw --optimize-cuts" + in,
      cli + " draw --svg" + in,
      cli + " solve-greedy" + in,
      cli + " stats" + in,
      cli + " upset --l 9 --points",
  };
  for (const auto& cmd : commands) {
    int s1 = 0, s2 = 0;
    const std::string a = run_capture(cmd, s1);
    const std::string b = run_capture(cmd, s2);
    if (s1 != 0 || s2 != 0) f.add("nonzero exit: " + cmd);
    if (a.empty()) f.add("empty output: " + cmd);
    if (a != b) f.add("output differs: " + cmd);
  }
  fs::remove_all(dir);
  return f.outcome(std::to_string(commands.size()) + " commands byte-identical across two runs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"recognition round trip", round_trip},
      {"mutation rejection", mutation},
      {"drawing dimensions and planarity", dimensions},
      {"area tracking", area},
      {"universal point set", universality},
      {"greedy matching completeness", matching},
      {"greedy solver correctness", greedy},
      {"determinism", determinism},
      // Last, so it also covers every drawing produced above.
      {"xi machinery and row bound", xi_machinery},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
