#include "arrangeline/core.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

namespace arrangeline {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), incident_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has an endpoint outside 0.." +
                                  std::to_string(n_ - 1));
    }
    incident_[ed.u].push_back(e);
    if (ed.v != ed.u) incident_[ed.v].push_back(e);
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  for (EdgeId e : incident_.at(u)) {
    if (other(e, u) == v) return e;
  }
  return std::nullopt;
}

RotationSystem RotationSystem::reflected() const {
  RotationSystem r = *this;
  for (auto& cycle : r.order) std::reverse(cycle.begin(), cycle.end());
  return r;
}

std::vector<Face> faces_of(const Graph& g, const RotationSystem& rotation) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (static_cast<int>(rotation.order.size()) != n) {
    throw StructuralError("rotation has " + std::to_string(rotation.order.size()) +
                          " vertex cycles, graph has " + std::to_string(n) + " vertices");
  }
  // position of edge e in the rotation of its endpoint u (slot 0) and v (slot 1)
  std::vector<std::array<int, 2>> pos(m, {-1, -1});
  for (VertexId w = 0; w < n; ++w) {
    const auto& cyc = rotation.order[w];
    if (static_cast<int>(cyc.size()) != g.degree(w)) {
      throw StructuralError("rotation at vertex " + std::to_string(w) + " has wrong length");
    }
    for (int i = 0; i < static_cast<int>(cyc.size()); ++i) {
      const EdgeId e = cyc[i];
      if (e < 0 || e >= m) throw StructuralError("rotation lists unknown edge");
      const Edge& ed = g.edge(e);
      if (ed.u == ed.v) throw StructuralError("self-loops are not supported by the dart walk");
      const int slot = ed.u == w ? 0 : (ed.v == w ? 1 : -1);
      if (slot < 0 || pos[e][slot] != -1) {
        throw StructuralError("edge " + std::to_string(e) + " misplaced in rotation at " +
                              std::to_string(w));
      }
      pos[e][slot] = i;
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (pos[e][0] < 0 || pos[e][1] < 0) {
      throw StructuralError("edge " + std::to_string(e) + " missing from an endpoint's rotation");
    }
  }

  // dart 2e runs u->v, dart 2e+1 runs v->u
  std::vector<char> seen(2 * static_cast<size_t>(m), 0);
  std::vector<Face> faces;
  for (int start = 0; start < 2 * m; ++start) {
    if (seen[start]) continue;
    Face face;
    int dart = start;
    while (!seen[dart]) {
      seen[dart] = 1;
      const EdgeId e = dart / 2;
      const Edge& ed = g.edge(e);
      const VertexId tail = dart % 2 == 0 ? ed.u : ed.v;
      const VertexId head = dart % 2 == 0 ? ed.v : ed.u;
      face.push_back(tail);
      const auto& cyc = rotation.order[head];
      const int at = pos[e][ed.u == head ? 0 : 1];
      const EdgeId next = cyc[(at + 1) % cyc.size()];
      dart = 2 * next + (g.edge(next).u == head ? 0 : 1);
    }
    if (dart != start) throw StructuralError("dart walk did not close");
    faces.push_back(std::move(face));
  }
  return faces;
}

Face canonical_face(const Face& face) {
  if (face.empty()) return face;
  const size_t k = face.size();
  Face best;
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t s = 0; s < k; ++s) {
      Face cand(k);
      for (size_t i = 0; i < k; ++i) {
        cand[i] = dir == 0 ? face[(s + i) % k] : face[(s + k - i) % k];
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

std::vector<Face> canonical_face_set(const std::vector<Face>& faces) {
  std::vector<Face> out;
  out.reserve(faces.size());
  for (const Face& f : faces) out.push_back(canonical_face(f));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const VertexId w = q.front();
    q.pop();
    for (EdgeId e : g.incident(w)) {
      const VertexId x = g.other(e, w);
      if (!seen[x]) {
        seen[x] = 1;
        ++count;
        q.push(x);
      }
    }
  }
  return count == n;
}

std::optional<GraphViolation> validate_graph(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexId> mark(n, -1);
  for (VertexId w = 0; w < n; ++w) {
    for (EdgeId e : g.incident(w)) {
      const VertexId x = g.other(e, w);
      if (x == w) {
        return GraphViolation{ViolationKind::SelfLoop, "self-loop at vertex " + std::to_string(w),
                              {w}};
      }
      if (mark[x] == w) {
        return GraphViolation{ViolationKind::MultiEdge,
                              "multi-edge {" + std::to_string(std::min(w, x)) + "," +
                                  std::to_string(std::max(w, x)) + "}",
                              {std::min(w, x), std::max(w, x)}};
      }
      mark[x] = w;
    }
  }
  for (VertexId w = 0; w < n; ++w) {
    if (g.degree(w) > 4) {
      return GraphViolation{ViolationKind::DegreeTooHigh,
                            "degree > 4 at vertex " + std::to_string(w) + " (degree " +
                                std::to_string(g.degree(w)) + ")",
                            {w}};
    }
  }
  if (!is_connected(g)) {
    return GraphViolation{ViolationKind::Disconnected, "graph is disconnected", {}};
  }
  return std::nullopt;
}

std::vector<Membership> build_membership(int vertex_count, const std::vector<Pseudoline>& lines) {
  std::vector<Membership> mem(vertex_count);
  for (int p = 0; p < static_cast<int>(lines.size()); ++p) {
    const auto& cr = lines[p].crossings;
    for (int i = 0; i < static_cast<int>(cr.size()); ++i) {
      const VertexId v = cr[i];
      if (v < 0 || v >= vertex_count) throw StructuralError("pseudoline lists unknown vertex");
      Membership& m = mem[v];
      if (m.line_a < 0) {
        m.line_a = p;
        m.index_a = i;
      } else if (m.line_b < 0 && m.line_a != p) {
        m.line_b = p;
        m.index_b = i;
      } else {
        throw StructuralError("vertex " + std::to_string(v) + " lies on more than two pseudolines");
      }
    }
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    Membership& m = mem[v];
    if (m.line_b < 0) {
      throw StructuralError("vertex " + std::to_string(v) + " is not on two pseudolines");
    }
    if (m.line_a > m.line_b) {
      std::swap(m.line_a, m.line_b);
      std::swap(m.index_a, m.index_b);
    }
  }
  return mem;
}

}  // namespace arrangeline
