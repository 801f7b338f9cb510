#ifndef ARRANGELINE_CORE_HPP
#define ARRANGELINE_CORE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace arrangeline {

using VertexId = int;
using EdgeId = int;

/// Thrown when a rotation system or embedding is internally inconsistent.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimal value-or-error holder (std::expected is not available in C++20).
template <class T, class E>
class Expected {
 public:
  Expected(T value) : data_(std::in_place_index<0>, std::move(value)) {}
  Expected(E error) : data_(std::in_place_index<1>, std::move(error)) {}

  bool has_value() const noexcept { return data_.index() == 0; }
  explicit operator bool() const noexcept { return has_value(); }

  T& value() & { return check(), std::get<0>(data_); }
  const T& value() const& { return check(), std::get<0>(data_); }
  T&& value() && { return check(), std::get<0>(std::move(data_)); }
  const E& error() const { return std::get<1>(data_); }

  T& operator*() & { return value(); }
  const T& operator*() const& { return value(); }
  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }

 private:
  void check() const {
    if (!has_value()) throw std::logic_error("Expected: no value");
  }
  std::variant<T, E> data_;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph with dense vertex ids 0..n-1 and edge ids in input order.
/// Parallel edges are representable (the v∞ augmentation needs them);
/// validate_graph decides whether a graph is a candidate arrangement graph.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument if an endpoint is outside 0..n-1.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const EdgeId> incident(VertexId v) const { return incident_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(incident_.at(v).size()); }
  VertexId other(EdgeId e, VertexId v) const {
    const Edge& ed = edges_.at(e);
    return ed.u == v ? ed.v : ed.u;
  }
  /// Edge joining u and v, if any (first in input order).
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

using ArrangementGraph = Graph;

/// Per-vertex cyclic sequence of incident edge ids.
struct RotationSystem {
  std::vector<std::vector<EdgeId>> order;

  RotationSystem reflected() const;
  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

/// Cyclic vertex sequence bounding a face.
using Face = std::vector<VertexId>;

/// Dart walk: arriving at w along e, leave along the successor of e in the
/// rotation at w. Throws StructuralError on a malformed rotation.
std::vector<Face> faces_of(const Graph& g, const RotationSystem& rotation);

/// Minimum over all rotations of both directions of the cycle.
Face canonical_face(const Face& face);

/// Sorted canonical faces, the representation used for face-set comparisons.
std::vector<Face> canonical_face_set(const std::vector<Face>& faces);

enum class ViolationKind { SelfLoop, MultiEdge, DegreeTooHigh, Disconnected };

struct GraphViolation {
  ViolationKind kind;
  std::string message;
  std::vector<VertexId> witness;
};

/// First violation of simplicity, the degree bound or connectivity.
std::optional<GraphViolation> validate_graph(const Graph& g);

bool is_connected(const Graph& g);

struct Pseudoline {
  int id = 0;
  std::vector<VertexId> crossings;
  friend bool operator==(const Pseudoline&, const Pseudoline&) = default;
};

/// pseudolines[line_a].crossings[index_a] == v, likewise for b; line_a < line_b.
struct Membership {
  int line_a = -1;
  int index_a = -1;
  int line_b = -1;
  int index_b = -1;
  friend bool operator==(const Membership&, const Membership&) = default;
};

/// One end of a pseudoline as it meets v∞. `at_front` is the end before
/// crossings.front().
struct PathEnd {
  int line = 0;
  bool at_front = true;
  friend bool operator==(const PathEnd&, const PathEnd&) = default;
};

struct ArrangementStructure {
  Graph graph;
  RotationSystem rotation;
  std::vector<Pseudoline> pseudolines;
  std::vector<Membership> membership;
  /// Cyclic order of the 2l path ends around v∞, consistent with `rotation`.
  std::vector<PathEnd> boundary;

  int line_count() const noexcept { return static_cast<int>(pseudolines.size()); }
};

/// Builds the membership index; throws StructuralError unless every vertex
/// lies on exactly two distinct pseudolines.
std::vector<Membership> build_membership(int vertex_count,
                                         const std::vector<Pseudoline>& lines);

constexpr long long triangular(long long l) { return l * (l - 1) / 2; }

}  // namespace arrangeline

#endif  // ARRANGELINE_CORE_HPP
