#include "arrangeline/greedy_solver.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <queue>
#include <string>
#include <utility>

namespace arrangeline {

namespace {

using Neighbors = std::vector<std::vector<std::pair<VertexId, EdgeId>>>;

Neighbors sorted_neighbors(const Graph& g) {
  Neighbors nb(g.vertex_count());
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    for (EdgeId e : g.incident(w)) nb[w].emplace_back(g.other(e, w), e);
    std::sort(nb[w].begin(), nb[w].end());
  }
  return nb;
}

EdgeId edge_between(const Graph& g, VertexId a, VertexId b) {
  auto e = g.find_edge(a, b);
  if (!e) throw SolverError("no edge between " + std::to_string(a) + " and " + std::to_string(b));
  return *e;
}

// Shortest u-v path over unused edges; neighbours scanned by increasing id.
std::optional<std::vector<VertexId>> shortest_unused_path(const Graph& g, const Neighbors& nb,
                                                          const std::vector<char>& used, VertexId u,
                                                          VertexId v) {
  std::vector<VertexId> parent(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<VertexId> q;
  q.push(u);
  seen[u] = 1;
  while (!q.empty() && !seen[v]) {
    const VertexId w = q.front();
    q.pop();
    for (auto [x, e] : nb[w]) {
      if (used[e] || seen[x]) continue;
      seen[x] = 1;
      parent[x] = w;
      q.push(x);
    }
  }
  if (!seen[v]) return std::nullopt;
  std::vector<VertexId> path;
  for (VertexId w = v; w != -1; w = parent[w]) path.push_back(w);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

bool PartialEmbedding::complete() const {
  return std::all_of(used_edges.begin(), used_edges.end(), [](char c) { return c != 0; });
}

std::vector<VertexId> shortest_cycle_through(const Graph& g, VertexId v) {
  const int n = g.vertex_count();
  const Neighbors nb = sorted_neighbors(g);
  std::vector<int> dist(n, -1);
  std::vector<VertexId> parent(n, -1), branch(n, -1);
  std::queue<VertexId> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    const VertexId w = q.front();
    q.pop();
    for (auto [x, e] : nb[w]) {
      if (dist[x] >= 0) continue;
      dist[x] = dist[w] + 1;
      parent[x] = w;
      branch[x] = w == v ? x : branch[w];
      q.push(x);
    }
  }

  auto climb = [&](VertexId from) {
    std::vector<VertexId> chain;
    for (VertexId w = from; w != v; w = parent[w]) chain.push_back(w);
    return chain;  // from .. child of v
  };

  std::vector<VertexId> best;
  Face best_key;
  for (const Edge& e : g.edges()) {
    const VertexId a = e.u;
    const VertexId b = e.v;
    if (a == v || b == v || dist[a] < 0 || dist[b] < 0) continue;
    if (branch[a] == branch[b] || parent[a] == b || parent[b] == a) continue;
    const std::size_t len = static_cast<std::size_t>(dist[a] + dist[b] + 1);
    if (!best.empty() && len > best.size()) continue;
    std::vector<VertexId> cycle{v};
    auto up = climb(a);
    cycle.insert(cycle.end(), up.rbegin(), up.rend());
    auto down = climb(b);
    cycle.insert(cycle.end(), down.begin(), down.end());
    Face key = canonical_face(cycle);
    if (best.empty() || len < best.size() || key < best_key) {
      best = std::move(cycle);
      best_key = std::move(key);
    }
  }
  if (best.empty()) throw SolverError("vertex " + std::to_string(v) + " lies on no cycle");
  if (best.size() > 2 && best[1] > best.back()) std::reverse(best.begin() + 1, best.end());
  return best;
}

PartialEmbedding start_embedding(const Graph& g, VertexId start) {
  if (start < 0 || start >= g.vertex_count()) throw std::invalid_argument("start vertex out of range");
  PartialEmbedding state;
  state.used_edges.assign(g.edge_count(), 0);
  state.boundary = shortest_cycle_through(g, start);
  const std::size_t k = state.boundary.size();
  for (std::size_t i = 0; i < k; ++i) {
    state.used_edges[edge_between(g, state.boundary[i], state.boundary[(i + 1) % k])] = 1;
  }
  state.faces.push_back(state.boundary);
  return state;
}

bool is_cell_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
  const int n = g.vertex_count();
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < k; ++i) {
    if (cycle[i] < 0 || cycle[i] >= n || pos[cycle[i]] != -1) return false;
    pos[cycle[i]] = static_cast<int>(i);
  }
  // Every cycle edge present, no chord.
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.find_edge(cycle[i], cycle[(i + 1) % k])) return false;
  }
  for (const Edge& e : g.edges()) {
    if (pos[e.u] < 0 || pos[e.v] < 0) continue;
    const int d = std::abs(pos[e.u] - pos[e.v]);
    if (d != 1 && d != static_cast<int>(k) - 1) return false;
  }
  // The rest, plus the extra vertex next to every low-degree vertex, must stay
  // connected. Search from the extra vertex (index n).
  std::vector<char> seen(n + 1, 0);
  std::vector<VertexId> stack{n};
  seen[n] = 1;
  int reached = 0;
  auto visit = [&](VertexId x) {
    if (pos[x] >= 0 || seen[x]) return;
    seen[x] = 1;
    stack.push_back(x);
  };
  while (!stack.empty()) {
    const VertexId w = stack.back();
    stack.pop_back();
    if (w == n) {
      for (VertexId x = 0; x < n; ++x) {
        if (g.degree(x) < 4) visit(x);
      }
      continue;
    }
    ++reached;
    for (EdgeId e : g.incident(w)) visit(g.other(e, w));
  }
  return reached == n - static_cast<int>(k);
}

std::optional<EarStep> next_ear(const Graph& g, const PartialEmbedding& state, EarRule rule) {
  if (state.complete()) return std::nullopt;
  const auto& b = state.boundary;
  const std::size_t k = b.size();
  std::vector<char> attach(k, 0);
  std::vector<char> on_boundary(g.vertex_count(), 0);
  std::size_t first = k;
  for (std::size_t i = 0; i < k; ++i) {
    on_boundary[b[i]] = 1;
    for (EdgeId e : g.incident(b[i])) {
      if (!state.used_edges[e]) attach[i] = 1;
    }
    if (attach[i] && (first == k || b[i] < b[first])) first = i;
  }
  if (first == k) throw SolverError("NO_ATTACHMENT_PAIR: unused edges remain but none touch the boundary");

  const Neighbors nb = sorted_neighbors(g);
  bool any_pair = false;
  for (std::size_t offset = 0; offset < k; ++offset) {
    const std::size_t i = (first + offset) % k;
    if (!attach[i]) continue;
    std::size_t j = (i + 1) % k;
    while (j != i && !attach[j]) j = (j + 1) % k;
    if (j == i) break;
    any_pair = true;

    EarStep ear;
    ear.u = b[i];
    ear.v = b[j];
    for (std::size_t t = i;; t = (t + 1) % k) {
      ear.boundary_path.push_back(b[t]);
      if (t == j) break;
    }
    auto path = shortest_unused_path(g, nb, state.used_edges, ear.u, ear.v);
    if (!path) continue;
    ear.shortest_path = std::move(*path);
    if (rule == EarRule::FirstPair) return ear;

    // A cell that also touches the disk away from P would pinch the boundary.
    const auto& sp = ear.shortest_path;
    if (std::any_of(sp.begin() + 1, sp.end() - 1, [&](VertexId x) { return on_boundary[x] != 0; })) continue;
    std::vector<VertexId> cycle = ear.shortest_path;
    for (std::size_t t = ear.boundary_path.size() - 2; t >= 1; --t) cycle.push_back(ear.boundary_path[t]);
    if (is_cell_cycle(g, cycle)) return ear;
  }
  if (!any_pair) throw SolverError("NO_ATTACHMENT_PAIR: only one attachment vertex on the boundary");
  throw SolverError(rule == EarRule::FirstPair ? "no path over unused edges between attachment vertices"
                                               : "NO_FACIAL_EAR: no attachment pair closes a cell");
}

void apply_ear(const Graph& g, PartialEmbedding& state, const EarStep& ear) {
  auto& b = state.boundary;
  const auto at = std::find(b.begin(), b.end(), ear.u);
  if (at == b.end()) throw SolverError("ear start is not on the boundary");
  std::rotate(b.begin(), at, b.end());
  const std::size_t plen = ear.boundary_path.size();
  if (plen < 2 || plen > b.size() || !std::equal(ear.boundary_path.begin(), ear.boundary_path.end(), b.begin())) {
    throw SolverError("ear boundary path does not match the boundary");
  }

  Face face = ear.shortest_path;
  for (std::size_t i = plen - 2; i >= 1; --i) face.push_back(ear.boundary_path[i]);
  state.faces.push_back(std::move(face));

  std::vector<VertexId> next(ear.shortest_path.begin(), ear.shortest_path.end());
  next.insert(next.end(), b.begin() + static_cast<long>(plen), b.end());
  b = std::move(next);

  for (std::size_t i = 0; i + 1 < ear.shortest_path.size(); ++i) {
    const EdgeId e = edge_between(g, ear.shortest_path[i], ear.shortest_path[i + 1]);
    if (state.used_edges[e]) throw SolverError("ear reuses an embedded edge");
    state.used_edges[e] = 1;
  }
  state.ears.push_back(ear);
}

RotationSystem rotation_from_faces(const Graph& g, const std::vector<Face>& faces) {
  const int m = g.edge_count();
  // succ[e][slot]: edge following e in the rotation at its endpoint (slot 0 = e.u)
  std::vector<std::array<EdgeId, 2>> succ(m, {-1, -1});
  for (const Face& f : faces) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i) {
      const VertexId a = f[(i + k - 1) % k];
      const VertexId w = f[i];
      const VertexId c = f[(i + 1) % k];
      const EdgeId in = edge_between(g, a, w);
      const EdgeId out = edge_between(g, w, c);
      EdgeId& slot = succ[in][g.edge(in).u == w ? 0 : 1];
      if (slot != -1) throw StructuralError("dart used by two faces");
      slot = out;
    }
  }
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    const auto inc = g.incident(w);
    if (inc.empty()) continue;
    EdgeId e = *std::min_element(inc.begin(), inc.end());
    for (std::size_t step = 0; step < inc.size(); ++step) {
      rot.order[w].push_back(e);
      e = succ[e][g.edge(e).u == w ? 0 : 1];
      if (e == -1) throw StructuralError("faces leave a dart at vertex " + std::to_string(w) + " unmatched");
    }
    std::vector<EdgeId> listed = rot.order[w];
    std::sort(listed.begin(), listed.end());
    if (e != rot.order[w].front() || std::adjacent_find(listed.begin(), listed.end()) != listed.end()) {
      throw StructuralError("faces around vertex " + std::to_string(w) + " do not form one disk");
    }
  }
  return rot;
}

GreedySolution solve(const Graph& g, std::optional<VertexId> start, EarRule rule) {
  PartialEmbedding state = start_embedding(g, start.value_or(0));
  GreedySolution out;
  out.initial_cycle = state.boundary;
  while (auto ear = next_ear(g, state, rule)) apply_ear(g, state, *ear);
  out.ears = state.ears;
  out.faces = state.faces;
  out.faces.emplace_back(state.boundary.rbegin(), state.boundary.rend());
  out.rotation = rotation_from_faces(g, out.faces);
  return out;
}

}  // namespace arrangeline
