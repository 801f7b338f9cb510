#ifndef ARRANGELINE_RECOGNIZER_HPP
#define ARRANGELINE_RECOGNIZER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "arrangeline/core.hpp"

namespace arrangeline {

enum class RejectionCode {
  NotPlanar,
  BadDegree,
  PathIsCycle,
  PathSelfCrosses,
  WrongVertexCount,
  PairMultiCross,
  Disconnected,
  TooSmall,
};

std::string_view to_string(RejectionCode code);

struct RejectionReason {
  RejectionCode code;
  std::string detail;
  /// Offending vertices: a cycle, a path, a Kuratowski subgraph's vertices...
  std::vector<VertexId> witness;
};

/// G plus v∞. Base edges keep their ids 0..m-1; augmentation edges follow.
/// Degree-2 base vertices receive two parallel edges to v∞, degree-3 one.
struct AugmentedGraph {
  Graph graph;
  VertexId infinity = -1;
  int base_edge_count = 0;
  RotationSystem rotation;

  bool is_augmentation_edge(EdgeId e) const noexcept { return e >= base_edge_count; }
};

/// Planar rotation system of a connected multigraph. Edges that have a
/// parallel twin are subdivided before the simple-graph embedder runs and
/// contracted afterwards.
Expected<RotationSystem, RejectionReason> planar_embed(const Graph& h);

/// Adds v∞ and embeds the result. Requires every base degree in 2..4.
Expected<AugmentedGraph, RejectionReason> augment(const Graph& g);

/// Reflects the augmented embedding if needed so that the output is
/// independent of the embedder's choice of mirror image, and rotates every
/// cycle to start at its smallest edge id.
void canonicalize(AugmentedGraph& aug);

/// Elementary-step counter for the linear-time claim; planarity excluded.
struct RecognizeCounters {
  long long steps = 0;
};

struct PathDecomposition {
  std::vector<Pseudoline> pseudolines;
  std::vector<PathEnd> boundary;
};

/// Splits the edges of the augmented graph into paths that pass through
/// opposite edges at every base vertex. Paths are numbered in the order their
/// first end appears in the rotation at v∞.
Expected<PathDecomposition, RejectionReason> path_decompose(const AugmentedGraph& aug,
                                                            RecognizeCounters* counters = nullptr);

/// Linear-time recognition. Throws std::invalid_argument on self-loops or
/// multi-edges (validate_graph must pass); every other failure is a
/// RejectionReason.
Expected<ArrangementStructure, RejectionReason> recognize(const Graph& g,
                                                          RecognizeCounters* counters = nullptr);

/// Bucket-sort check that no two pseudolines share more than one vertex.
/// Returns the two vertices witnessing a repeated pair, if any.
std::optional<std::pair<VertexId, VertexId>> find_repeated_pair(
    int line_count, const std::vector<Membership>& membership, RecognizeCounters* counters = nullptr);

}  // namespace arrangeline

#endif  // ARRANGELINE_RECOGNIZER_HPP
