#include "arrangeline/grid_draw.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace arrangeline {

void GridDrawing::update_extent() {
  width = 0;
  height = 0;
  for (const Point& p : positions) {
    width = std::max(width, p.x + 1);
    height = std::max(height, p.y + 1);
  }
}

GridDrawing draw(const ArrangementStructure& s, const WiringDiagram& d, const DrawOptions& options) {
  if (options.stretch < 1) throw std::invalid_argument("stretch must be >= 1");
  const int n = s.graph.vertex_count();
  GridDrawing out;
  out.edges = s.graph.edges();
  out.positions.assign(n, Point{-1, -1});
  std::vector<std::int64_t> filled(std::max(0, d.l - 1), 0);
  for (const Crossing& c : d.crossings) {
    if (c.vertex < 0 || c.vertex >= n) throw std::invalid_argument("diagram names an unknown vertex");
    if (c.level < 1 || c.level >= d.l) throw std::invalid_argument("crossing level out of range");
    Point& p = out.positions[c.vertex];
    if (p.y >= 0) throw std::invalid_argument("vertex crossed twice in diagram");
    p = Point{filled[c.level - 1]++ * options.stretch, c.level - 1};
  }
  for (const Point& p : out.positions) {
    if (p.y < 0) throw std::invalid_argument("diagram misses a vertex");
  }
  out.update_extent();
  return out;
}

OptimizedDrawing draw_optimized(const ArrangementStructure& s, const DrawOptions& options) {
  std::optional<OptimizedDrawing> best;
  for (int cut = 0; cut < static_cast<int>(s.boundary.size()); ++cut) {
    auto oriented = choose_cut(s, cut);
    if (!oriented) continue;
    auto diagram = build_wiring(*oriented);
    if (!diagram) continue;
    GridDrawing g = draw(s, *diagram, options);
    if (!best || g.width < best->drawing.width) {
      best = OptimizedDrawing{std::move(g), std::move(diagram).value()};
    }
  }
  if (!best) throw std::invalid_argument("structure has no valid cut");
  return std::move(*best);
}

std::string to_svg(const GridDrawing& drawing, int scale) {
  if (scale < 1) throw std::invalid_argument("scale must be >= 1");
  const double s = scale;
  const auto h = drawing.height;
  auto cx = [&](const Point& p) { return (static_cast<double>(p.x) + 0.5) * s; };
  auto cy = [&](const Point& p) { return (static_cast<double>(h - p.y) - 0.5) * s; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << drawing.width * scale << ' '
      << drawing.height * scale << "\" width=\"" << drawing.width * scale << "\" height=\""
      << drawing.height * scale << "\">\n";
  for (const Edge& e : drawing.edges) {
    const Point& a = drawing.positions.at(e.u);
    const Point& b = drawing.positions.at(e.v);
    out << "  <line x1=\"" << cx(a) << "\" y1=\"" << cy(a) << "\" x2=\"" << cx(b) << "\" y2=\""
        << cy(b) << "\" stroke=\"black\" stroke-width=\"" << s / 20 << "\"/>\n";
  }
  for (std::size_t v = 0; v < drawing.positions.size(); ++v) {
    const Point& p = drawing.positions[v];
    out << "  <circle id=\"v" << v << "\" cx=\"" << cx(p) << "\" cy=\"" << cy(p) << "\" r=\""
        << s / 8 << "\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace arrangeline
