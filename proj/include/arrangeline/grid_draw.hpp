#ifndef ARRANGELINE_GRID_DRAW_HPP
#define ARRANGELINE_GRID_DRAW_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arrangeline/core.hpp"
#include "arrangeline/wiring.hpp"

namespace arrangeline {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Straight-line drawing on the integer lattice; width and height are
/// max x + 1 and max y + 1 (0 for an empty drawing).
struct GridDrawing {
  std::vector<Point> positions;
  std::vector<Edge> edges;
  std::int64_t width = 0;
  std::int64_t height = 0;

  /// Recomputes width and height from the positions.
  void update_extent();
  friend bool operator==(const GridDrawing&, const GridDrawing&) = default;
};

struct DrawOptions {
  /// Uniform horizontal stretch; column k is drawn at x = k * stretch.
  std::int64_t stretch = 1;
};

/// Vertex on level j, k-th within that level in diagram order, goes to
/// (k-1, j-1). Throws std::invalid_argument if the diagram does not cover
/// every vertex of the structure exactly once.
GridDrawing draw(const ArrangementStructure& s, const WiringDiagram& d, const DrawOptions& options = {});

struct OptimizedDrawing {
  GridDrawing drawing;
  WiringDiagram diagram;
};

/// Minimum-width drawing over every valid cut (ties: smallest cut index).
OptimizedDrawing draw_optimized(const ArrangementStructure& s, const DrawOptions& options = {});

/// One circle per vertex (radius scale/8) and one line per edge, cell centres
/// at ((x+0.5)*scale, (height-y-0.5)*scale) so row 0 is at the bottom.
std::string to_svg(const GridDrawing& drawing, int scale = 40);

}  // namespace arrangeline

#endif  // ARRANGELINE_GRID_DRAW_HPP
