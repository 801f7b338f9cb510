#include "arrangeline/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace arrangeline {

namespace {

using i128 = __int128;

int orient(const Point& a, const Point& b, const Point& c) {
  const i128 cross = i128{b.x - a.x} * (c.y - a.y) - i128{b.y - a.y} * (c.x - a.x);
  return (cross > 0) - (cross < 0);
}

// p lies on the closed segment ab (given collinearity).
bool within_box(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool closed_segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && within_box(a, b, c)) return true;
  if (o2 == 0 && within_box(a, b, d)) return true;
  if (o3 == 0 && within_box(c, d, a)) return true;
  if (o4 == 0 && within_box(c, d, b)) return true;
  return false;
}

}  // namespace

CrossingReport straightline_planar(const GridDrawing& drawing) {
  CrossingReport report;
  const auto& pos = drawing.positions;
  const auto& edges = drawing.edges;
  const int n = static_cast<int>(pos.size());
  constexpr std::int64_t limit = std::int64_t{1} << 62;
  for (const Point& p : pos) {
    if (p.x >= limit || p.x <= -limit || p.y >= limit || p.y <= -limit) {
      throw std::invalid_argument("straightline_planar: coordinate exceeds 62 bits");
    }
  }
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw std::invalid_argument("edge names unknown vertex");
  }

  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return pos[a] == pos[b] ? a < b : pos[a] < pos[b];
  });
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && pos[order[j]] == pos[order[i]]; ++j) {
      report.coincident.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
    }
  }
  std::sort(report.coincident.begin(), report.coincident.end());

  const int m = static_cast<int>(edges.size());
  for (int i = 0; i < m; ++i) {
    const Edge& e = edges[i];
    for (int j = i + 1; j < m; ++j) {
      const Edge& f = edges[j];
      const bool share_u = e.u == f.u || e.u == f.v;
      const bool share_v = e.v == f.u || e.v == f.v;
      bool bad = false;
      if (share_u && share_v) {
        bad = true;
      } else if (share_u || share_v) {
        const VertexId w = share_u ? e.u : e.v;
        const Point& x = pos[share_u ? e.v : e.u];
        const Point& y = pos[f.u == w ? f.v : f.u];
        const Point& o = pos[w];
        // Adjacent segments overlap iff collinear and pointing the same way.
        if (orient(o, x, y) == 0) {
          const i128 dot = i128{x.x - o.x} * (y.x - o.x) + i128{x.y - o.y} * (y.y - o.y);
          bad = dot > 0;
        }
      } else {
        bad = closed_segments_meet(pos[e.u], pos[e.v], pos[f.u], pos[f.v]);
      }
      if (bad) report.edge_pairs.emplace_back(i, j);
    }
  }

  for (VertexId w = 0; w < n; ++w) {
    for (int i = 0; i < m; ++i) {
      const Edge& e = edges[i];
      if (e.u == w || e.v == w) continue;
      const Point& a = pos[e.u];
      const Point& b = pos[e.v];
      const Point& p = pos[w];
      if (p == a || p == b) continue;
      if (orient(a, b, p) == 0 && within_box(a, b, p)) report.vertex_on_edge.emplace_back(w, i);
    }
  }
  return report;
}

bool same_face_set(const std::vector<Face>& a, const std::vector<Face>& b) {
  const auto ca = canonical_face_set(a);
  if (ca == canonical_face_set(b)) return true;
  std::vector<Face> reflected;
  reflected.reserve(b.size());
  for (const Face& f : b) reflected.emplace_back(f.rbegin(), f.rend());
  return ca == canonical_face_set(reflected);
}

std::vector<std::vector<VertexId>> enumerate_cycles_through(const Graph& g, VertexId v, int max_len) {
  if (g.vertex_count() > 15) {
    throw std::invalid_argument("enumerate_cycles_through: limited to graphs with at most 15 vertices");
  }
  std::vector<std::vector<VertexId>> cycles;
  if (max_len < 3) return cycles;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<VertexId> path{v};
  on_path[v] = 1;

  std::function<void(VertexId)> extend = [&](VertexId w) {
    for (EdgeId e : g.incident(w)) {
      const VertexId x = g.other(e, w);
      if (x == v) {
        // Close the cycle once per direction pair: keep path[1] < last.
        if (path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
        continue;
      }
      if (on_path[x] || static_cast<int>(path.size()) >= max_len) continue;
      on_path[x] = 1;
      path.push_back(x);
      extend(x);
      path.pop_back();
      on_path[x] = 0;
    }
  };
  extend(v);
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

bool same_pseudolines(const std::vector<Pseudoline>& recognized,
                      const std::vector<std::vector<VertexId>>& truth) {
  auto normal = [](std::vector<VertexId> seq) {
    std::vector<VertexId> rev(seq.rbegin(), seq.rend());
    return std::min(seq, rev);
  };
  std::vector<std::vector<VertexId>> a, b;
  for (const auto& p : recognized) a.push_back(normal(p.crossings));
  for (const auto& t : truth) b.push_back(normal(t));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace arrangeline
