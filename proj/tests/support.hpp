// Independent reference computations for the test suites. Nothing here calls
// the library routine it is used to check.
#ifndef ARRANGELINE_TESTS_SUPPORT_HPP
#define ARRANGELINE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "arrangeline/core.hpp"
#include "arrangeline/generators.hpp"
#include "arrangeline/grid_draw.hpp"
#include "arrangeline/wiring.hpp"

namespace oracle {

using arrangeline::Edge;
using arrangeline::Graph;
using arrangeline::VertexId;

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.push_back({u, v});
  return Graph(n, std::move(e));
}

inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

/// Number of vertices shared by every pair of vertex sequences, quadratic scan.
inline std::map<std::pair<int, int>, int> shared_counts(const std::vector<std::vector<VertexId>>& lines) {
  std::map<std::pair<int, int>, int> out;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      int c = 0;
      for (VertexId x : lines[a])
        for (VertexId y : lines[b]) c += x == y;
      out[{static_cast<int>(a), static_cast<int>(b)}] = c;
    }
  }
  return out;
}

inline std::vector<std::vector<VertexId>> sequences(const std::vector<arrangeline::Pseudoline>& p) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& line : p) out.push_back(line.crossings);
  return out;
}

/// Edge multiset as sorted (min, max) pairs.
inline std::vector<std::pair<int, int>> edge_set(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(out.begin(), out.end());
  return out;
}

/// Replays a diagram: returns the pseudoline pair swapped by each crossing and
/// the final permutation; `ok` is false if a level is out of range.
struct Replay {
  bool ok = true;
  std::vector<std::pair<int, int>> swapped;
  std::vector<int> final_tracks;
};

inline Replay replay(const arrangeline::WiringDiagram& d) {
  Replay r;
  std::vector<int> t = d.initial_tracks;
  for (const auto& c : d.crossings) {
    if (c.level < 1 || c.level >= d.l) {
      r.ok = false;
      return r;
    }
    int& lo = t[c.level - 1];
    int& hi = t[c.level];
    r.swapped.emplace_back(std::min(lo, hi), std::max(lo, hi));
    std::swap(lo, hi);
  }
  r.final_tracks = t;
  return r;
}

/// Level sizes counted straight from the crossing list.
inline std::vector<int> count_levels(const arrangeline::WiringDiagram& d) {
  std::vector<int> sizes(std::max(d.l - 1, 0), 0);
  for (const auto& c : d.crossings) ++sizes[c.level - 1];
  return sizes;
}

/// Sum of i XOR (i-1) by direct iteration.
inline std::uint64_t xi_sum_loop(std::uint64_t s) {
  std::uint64_t sum = 0;
  for (std::uint64_t i = 1; i <= s; ++i) sum += (std::uint64_t{2} << std::countr_zero(i)) - 1;
  return sum;
}

/// Whether alphas can be matched to strictly increasing rows 1..s with
/// xi(row) >= alpha: exhaustive search over placements, memoized on
/// (alpha index, last row used).
inline bool matchable(const std::vector<std::int64_t>& alphas, int s) {
  const int k = static_cast<int>(alphas.size());
  std::vector<std::vector<signed char>> memo(k + 1, std::vector<signed char>(s + 1, -1));
  auto xi = [](int i) { return static_cast<std::int64_t>(i ^ (i - 1)); };
  auto can = [&](auto&& self, int j, int last) -> bool {
    if (j == k) return true;
    signed char& m = memo[j][last];
    if (m >= 0) return m != 0;
    bool ok = false;
    for (int row = last + 1; row <= s && !ok; ++row) {
      if (xi(row) >= alphas[j]) ok = self(self, j + 1, row);
    }
    m = ok ? 1 : 0;
    return ok;
  };
  return can(can, 0, 0);
}

/// Exact position of the crossing of two lines: x = nx/d, y = ny/d with d > 0.
struct RationalPoint {
  __int128 nx, ny, d;
};

inline RationalPoint intersect(const arrangeline::Line& p, const arrangeline::Line& q) {
  __int128 d = static_cast<__int128>(p.a) * q.b - static_cast<__int128>(q.a) * p.b;
  __int128 nx = static_cast<__int128>(p.c) * q.b - static_cast<__int128>(q.c) * p.b;
  __int128 ny = static_cast<__int128>(p.a) * q.c - static_cast<__int128>(q.a) * p.c;
  if (d < 0) {
    d = -d;
    nx = -nx;
    ny = -ny;
  }
  return {nx, ny, d};
}

/// Orders points on a line lexicographically by (x, y). Along a line this is
/// a monotone order (one of the two directions).
inline bool lex_less(const RationalPoint& a, const RationalPoint& b) {
  // With coefficients up to 10^6 every factor is below 2^43.
  const __int128 ax = a.nx * b.d, bx = b.nx * a.d;
  if (ax != bx) return ax < bx;
  return a.ny * b.d < b.ny * a.d;
}

/// Arrangement graph of a line set computed from scratch: returns, for each
/// line, the partner line indices of its crossings in order along the line.
inline std::vector<std::vector<int>> partner_order(const std::vector<arrangeline::Line>& lines) {
  const int l = static_cast<int>(lines.size());
  std::vector<std::vector<int>> out(l);
  for (int i = 0; i < l; ++i) {
    std::vector<int> others;
    for (int j = 0; j < l; ++j)
      if (j != i) others.push_back(j);
    std::sort(others.begin(), others.end(), [&](int a, int b) {
      return lex_less(intersect(lines[i], lines[a]), intersect(lines[i], lines[b]));
    });
    out[i] = others;
  }
  return out;
}

/// Brute-force planarity of a straight-line lattice drawing. Two edges may
/// only meet at a shared endpoint, and then only in that point; no vertex
/// may sit on another edge or on another vertex. Segment pairs are solved
/// as a 2x2 linear system with Cramer's rule in 128-bit integers.
inline bool drawing_is_planar(const std::vector<arrangeline::Point>& pos, const std::vector<Edge>& edges) {
  using I = __int128;
  const int n = static_cast<int>(pos.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (pos[a] == pos[b]) return false;
  // Point p on closed segment [q, r]?
  auto on_segment = [](const arrangeline::Point& p, const arrangeline::Point& q, const arrangeline::Point& r) {
    const I cross = static_cast<I>(r.x - q.x) * (p.y - q.y) - static_cast<I>(r.y - q.y) * (p.x - q.x);
    if (cross != 0) return false;
    return std::min(q.x, r.x) <= p.x && p.x <= std::max(q.x, r.x) && std::min(q.y, r.y) <= p.y &&
           p.y <= std::max(q.y, r.y);
  };
  for (int v = 0; v < n; ++v)
    for (const Edge& e : edges)
      if (v != e.u && v != e.v && on_segment(pos[v], pos[e.u], pos[e.v])) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& p0 = pos[edges[i].u];
      const auto& p1 = pos[edges[i].v];
      const auto& q0 = pos[edges[j].u];
      const auto& q1 = pos[edges[j].v];
      const int shared = (edges[i].u == edges[j].u) + (edges[i].u == edges[j].v) + (edges[i].v == edges[j].u) +
                         (edges[i].v == edges[j].v);
      // Solve p0 + t (p1 - p0) = q0 + u (q1 - q0) by Cramer's rule.
      const I dx = p1.x - p0.x, dy = p1.y - p0.y, ex = q1.x - q0.x, ey = q1.y - q0.y;
      const I den = dx * ey - dy * ex;
      const I wx = q0.x - p0.x, wy = q0.y - p0.y;
      if (shared == 2) return false;  // the same segment drawn twice
      if (den == 0) {
        // Parallel: collinear overlap of positive length is a violation.
        if (dx * wy - dy * wx != 0) continue;
        int touching = on_segment(q0, p0, p1) + on_segment(q1, p0, p1) + on_segment(p0, q0, q1) +
                       on_segment(p1, q0, q1);
        if (shared == 0 && touching > 0) return false;
        if (shared == 1 && touching > 2) return false;
        continue;
      }
      if (shared > 0) continue;  // non-parallel edges through a shared point meet only there
      I tn = wx * ey - wy * ex, un = wx * dy - wy * dx;
      I d = den;
      if (d < 0) {
        d = -d;
        tn = -tn;
        un = -un;
      }
      if (0 <= tn && tn <= d && 0 <= un && un <= d) return false;
    }
  }
  return true;
}

}  // namespace oracle

#endif  // ARRANGELINE_TESTS_SUPPORT_HPP
