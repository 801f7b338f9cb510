#ifndef ARRANGELINE_VERIFY_HPP
#define ARRANGELINE_VERIFY_HPP

#include <utility>
#include <vector>

#include "arrangeline/core.hpp"
#include "arrangeline/grid_draw.hpp"

namespace arrangeline {

/// Violations of a straight-line planar drawing. Edge pairs are (i, j) with
/// i < j; vertex/edge pairs name a vertex lying in the open interior of an
/// edge; coincident pairs are distinct vertices placed on the same point.
struct CrossingReport {
  std::vector<std::pair<EdgeId, EdgeId>> edge_pairs;
  std::vector<std::pair<VertexId, EdgeId>> vertex_on_edge;
  std::vector<std::pair<VertexId, VertexId>> coincident;

  bool planar() const noexcept {
    return edge_pairs.empty() && vertex_on_edge.empty() && coincident.empty();
  }
};

/// O(m^2 + nm) exact test. Coordinates must fit in 62 bits; products are
/// taken in 128-bit arithmetic.
CrossingReport straightline_planar(const GridDrawing& drawing);

/// Equality of canonical face sets, also trying the global reflection of b.
bool same_face_set(const std::vector<Face>& a, const std::vector<Face>& b);

/// Every simple cycle through v with at most max_len vertices, each listed
/// once, starting at v with cycle[1] < cycle.back(). Throws
/// std::invalid_argument when the graph has more than 15 vertices.
std::vector<std::vector<VertexId>> enumerate_cycles_through(const Graph& g, VertexId v, int max_len);

/// True when the pseudolines of a recognized structure and a ground-truth
/// decomposition cover the same vertex sets (up to renumbering and direction).
bool same_pseudolines(const std::vector<Pseudoline>& recognized,
                      const std::vector<std::vector<VertexId>>& truth);

}  // namespace arrangeline

#endif  // ARRANGELINE_VERIFY_HPP
