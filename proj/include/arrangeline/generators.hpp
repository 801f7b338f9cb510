#ifndef ARRANGELINE_GENERATORS_HPP
#define ARRANGELINE_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arrangeline/core.hpp"
#include "arrangeline/wiring.hpp"

namespace arrangeline {

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a x + b y = c
struct Line {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  friend bool operator==(const Line&, const Line&) = default;
};

struct LineSet {
  std::vector<Line> lines;
  std::uint64_t seed = 0;
};

struct GeneratorOptions {
  std::int64_t coefficient_bound = 1'000'000;
  int redraw_budget = 1000;
};

struct GeneratedInstance {
  int l = 0;
  LineSet lines;
  Graph graph;
  /// Tangled start: vertices evenly spaced on the unit circle in random order.
  std::vector<std::array<double, 2>> layout;
  /// ground_truth[i] = crossings along lines[i], sorted along the line.
  std::vector<std::vector<VertexId>> ground_truth;
};

/// Exact general-position tests (128-bit integer arithmetic).
bool parallel(const Line& p, const Line& q);
bool concurrent(const Line& p, const Line& q, const Line& r);

/// Random lines in general position and their arrangement graph. Vertex ids
/// are a seeded permutation of the crossings. Throws GeneratorError if a line
/// cannot be placed within the redraw budget.
GeneratedInstance random_lines(int l, std::uint64_t seed, const GeneratorOptions& options = {});

/// Level i of the puzzle uses l = i + 3 lines.
GeneratedInstance planarity_level(int i, std::uint64_t seed);

/// Identity start, then repeatedly swap a uniformly chosen adjacent pair that
/// has not crossed yet. Crossing vertex ids are 0..n-1 in emission order.
WiringDiagram random_wiring(int l, std::uint64_t seed);

/// Highest-kappa diagram among `rounds` random ones (first found on ties).
WiringDiagram max_kappa_wiring(int l, std::uint64_t seed, int rounds);

/// d1 on the bottom tracks, d2 above it, then a full crossing grid between
/// the two blocks. d2's pseudolines and vertices are renumbered after d1's.
WiringDiagram stacked(const WiringDiagram& d1, const WiringDiagram& d2);

struct WiringGraph {
  Graph graph;
  /// Crossing sequence of every wire in diagram order.
  std::vector<std::vector<VertexId>> pseudolines;
};

/// Vertices are the crossings; edges join consecutive crossings on a wire.
WiringGraph graph_of(const WiringDiagram& d);

}  // namespace arrangeline

#endif  // ARRANGELINE_GENERATORS_HPP
