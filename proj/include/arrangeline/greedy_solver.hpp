#ifndef ARRANGELINE_GREEDY_SOLVER_HPP
#define ARRANGELINE_GREEDY_SOLVER_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "arrangeline/core.hpp"

namespace arrangeline {

/// u and v are consecutive attachment vertices on the boundary; boundary_path
/// runs u..v along it, shortest_path u..v over unused edges.
struct EarStep {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<VertexId> boundary_path;
  std::vector<VertexId> shortest_path;
  friend bool operator==(const EarStep&, const EarStep&) = default;
};

/// Faces are stored with the embedded disk on their left; `boundary` runs the
/// same way, so the outer face is its reverse.
struct PartialEmbedding {
  std::vector<char> used_edges;
  std::vector<VertexId> boundary;
  std::vector<Face> faces;
  std::vector<EarStep> ears;

  bool complete() const;
};

class SolverError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Minimum-length cycle through v from a BFS tree rooted at v: the best
/// non-tree edge {a, b} whose endpoints hang off different children of v.
/// Ties go to the lexicographically smallest canonical cycle. The cycle is
/// returned starting at v. Throws SolverError if v lies on no cycle.
std::vector<VertexId> shortest_cycle_through(const Graph& g, VertexId v);

/// Steps 1-3: the shortest cycle through `start` as the initial disk.
PartialEmbedding start_embedding(const Graph& g, VertexId start);

/// How next_ear picks among the consecutive attachment pairs, which are tried
/// in boundary order starting from the smallest attachment vertex.
enum class EarRule {
  /// First pair whose S meets the boundary only at u and v and whose cycle
  /// P + S passes is_cell_cycle. Default.
  Facial,
  /// First pair, unconditionally. When the face beyond P is the outer face
  /// this closes a cycle that is not a face (smallest case: l = 4).
  FirstPair,
};

/// True when `cycle` bounds a bounded cell of the arrangement graph g: it is
/// induced and non-separating in g plus one extra vertex joined to every
/// vertex of degree < 4. That graph is 3-connected, so these are exactly its
/// faces. Uses no embedding.
bool is_cell_cycle(const Graph& g, const std::vector<VertexId>& cycle);

/// Next ear, or nullopt when every edge is used. Throws SolverError if no
/// attachment pair, no u-v path, or (Facial) no facial candidate exists.
std::optional<EarStep> next_ear(const Graph& g, const PartialEmbedding& state, EarRule rule = EarRule::Facial);

/// Records the face P ∪ S and replaces P by S on the boundary.
void apply_ear(const Graph& g, PartialEmbedding& state, const EarStep& ear);

struct GreedySolution {
  std::vector<VertexId> initial_cycle;
  std::vector<EarStep> ears;
  /// Every face including the final outer one.
  std::vector<Face> faces;
  RotationSystem rotation;
};

/// Runs the greedy ear decomposition to completion (default start: vertex 0).
GreedySolution solve(const Graph& g, std::optional<VertexId> start = std::nullopt,
                     EarRule rule = EarRule::Facial);

/// Rotation system whose dart walk reproduces `faces` exactly. Throws
/// StructuralError if the faces do not close up into a surface.
RotationSystem rotation_from_faces(const Graph& g, const std::vector<Face>& faces);

}  // namespace arrangeline

#endif  // ARRANGELINE_GREEDY_SOLVER_HPP
