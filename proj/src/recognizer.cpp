#include "arrangeline/recognizer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace arrangeline {

std::string_view to_string(RejectionCode code) {
  switch (code) {
    case RejectionCode::NotPlanar: return "NOT_PLANAR";
    case RejectionCode::BadDegree: return "BAD_DEGREE";
    case RejectionCode::PathIsCycle: return "PATH_IS_CYCLE";
    case RejectionCode::PathSelfCrosses: return "PATH_SELF_CROSSES";
    case RejectionCode::WrongVertexCount: return "WRONG_VERTEX_COUNT";
    case RejectionCode::PairMultiCross: return "PAIR_MULTI_CROSS";
    case RejectionCode::Disconnected: return "DISCONNECTED";
    case RejectionCode::TooSmall: return "TOO_SMALL";
  }
  return "UNKNOWN";
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

RejectionReason reject(RejectionCode code, std::string detail, std::vector<VertexId> witness = {}) {
  return RejectionReason{code, std::move(detail), std::move(witness)};
}

// Slot of edge e in the rotation at each endpoint: [0] at edge.u, [1] at edge.v.
std::vector<std::array<int, 2>> rotation_positions(const Graph& g, const RotationSystem& rot) {
  std::vector<std::array<int, 2>> pos(g.edge_count(), {-1, -1});
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    const auto& cyc = rot.order[w];
    for (int i = 0; i < static_cast<int>(cyc.size()); ++i) {
      const Edge& ed = g.edge(cyc[i]);
      pos[cyc[i]][ed.u == w ? 0 : 1] = i;
    }
  }
  return pos;
}

}  // namespace

Expected<RotationSystem, RejectionReason> planar_embed(const Graph& h) {
  const int n = h.vertex_count();
  const int m = h.edge_count();

  // Subdivide every edge that repeats an earlier endpoint pair.
  std::map<std::pair<VertexId, VertexId>, int> seen_pairs;
  std::vector<EdgeId> origin;  // boost edge index -> edge of h
  int total_vertices = n;
  std::vector<std::array<VertexId, 2>> boost_edges;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = h.edge(e);
    if (ed.u == ed.v) throw std::invalid_argument("planar_embed: self-loops are not supported");
    const auto key = std::minmax(ed.u, ed.v);
    if (seen_pairs[key]++ == 0) {
      boost_edges.push_back({ed.u, ed.v});
      origin.push_back(e);
    } else {
      const VertexId dummy = total_vertices++;
      boost_edges.push_back({ed.u, dummy});
      origin.push_back(e);
      boost_edges.push_back({dummy, ed.v});
      origin.push_back(e);
    }
  }

  BoostGraph bg(total_vertices);
  for (int k = 0; k < static_cast<int>(boost_edges.size()); ++k) {
    boost::add_edge(boost_edges[k][0], boost_edges[k][1], k, bg);
  }

  std::vector<std::vector<BoostEdge>> storage(total_vertices);
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  const auto edge_index = boost::get(boost::edge_index, bg);
  if (!planar) {
    std::vector<VertexId> witness;
    for (const BoostEdge& be : kuratowski) {
      for (int end : {static_cast<int>(boost::source(be, bg)), static_cast<int>(boost::target(be, bg))}) {
        if (end < n) witness.push_back(end);
      }
    }
    std::sort(witness.begin(), witness.end());
    witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
    return reject(RejectionCode::NotPlanar, "graph contains a Kuratowski subgraph", std::move(witness));
  }

  RotationSystem rot;
  rot.order.resize(n);
  for (VertexId w = 0; w < n; ++w) {
    for (const BoostEdge& be : storage[w]) rot.order[w].push_back(origin[edge_index[be]]);
  }
  return rot;
}

Expected<AugmentedGraph, RejectionReason> augment(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (VertexId v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d < 2 || d > 4) {
      return reject(RejectionCode::BadDegree,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(d), {v});
    }
    for (int k = d; k < 4; ++k) edges.push_back({v, n});
  }
  AugmentedGraph aug;
  aug.graph = Graph(n + 1, std::move(edges));
  aug.infinity = n;
  aug.base_edge_count = g.edge_count();
  auto rot = planar_embed(aug.graph);
  if (!rot) {
    RejectionReason r = rot.error();
    r.detail = "augmented graph is not planar: " + r.detail;
    return r;
  }
  aug.rotation = std::move(rot).value();
  return aug;
}

void canonicalize(AugmentedGraph& aug) {
  const int n = aug.infinity;

  auto base_cycle = [&](VertexId v) {
    std::vector<EdgeId> out;
    for (EdgeId e : aug.rotation.order[v]) {
      if (!aug.is_augmentation_edge(e)) out.push_back(e);
    }
    return out;
  };

  std::vector<EdgeId> reference;
  for (int want : {4, 3}) {
    for (VertexId v = 0; v < n && reference.empty(); ++v) {
      auto cyc = base_cycle(v);
      if (static_cast<int>(cyc.size()) == want) reference = std::move(cyc);
    }
    if (!reference.empty()) break;
  }
  if (reference.empty()) reference = aug.rotation.order[aug.infinity];

  if (reference.size() >= 3) {
    const auto it = std::min_element(reference.begin(), reference.end());
    const size_t k = reference.size();
    const size_t at = static_cast<size_t>(it - reference.begin());
    const EdgeId succ = reference[(at + 1) % k];
    const EdgeId pred = reference[(at + k - 1) % k];
    if (succ > pred) aug.rotation = aug.rotation.reflected();
  }
  for (auto& cyc : aug.rotation.order) {
    if (!cyc.empty()) std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
  }
}

Expected<PathDecomposition, RejectionReason> path_decompose(const AugmentedGraph& aug,
                                                            RecognizeCounters* counters) {
  const Graph& h = aug.graph;
  const VertexId inf = aug.infinity;
  long long steps = 0;

  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (v != inf && h.degree(v) != 4) {
      return reject(RejectionCode::BadDegree,
                    "augmented vertex " + std::to_string(v) + " does not have degree four", {v});
    }
  }
  const auto pos = rotation_positions(h, aug.rotation);
  auto opposite = [&](EdgeId in, VertexId w) {
    const int at = pos[in][h.edge(in).u == w ? 0 : 1];
    return aug.rotation.order[w][(at + 2) % 4];
  };

  std::vector<char> used(h.edge_count(), 0);
  std::vector<std::vector<VertexId>> paths;
  std::vector<PathEnd> end_of(h.edge_count());
  std::vector<char> is_end(h.edge_count(), 0);
  const auto& at_inf = aug.rotation.order[inf];
  const long long walk_limit = 2LL * h.edge_count() + 2;

  for (EdgeId first : at_inf) {
    ++steps;
    if (is_end[first]) continue;
    const int id = static_cast<int>(paths.size());
    std::vector<VertexId> path;
    EdgeId in = first;
    VertexId w = h.other(first, inf);
    used[first] = 1;
    for (long long guard = 0;; ++guard) {
      if (guard > walk_limit) throw StructuralError("path walk did not terminate");
      ++steps;
      path.push_back(w);
      const EdgeId out = opposite(in, w);
      used[out] = 1;
      const VertexId next = h.other(out, w);
      if (next == inf) {
        is_end[first] = is_end[out] = 1;
        end_of[first] = PathEnd{id, true};
        end_of[out] = PathEnd{id, false};
        break;
      }
      in = out;
      w = next;
    }
    paths.push_back(std::move(path));
  }

  for (EdgeId e = 0; e < aug.base_edge_count; ++e) {
    ++steps;
    if (used[e]) continue;
    // Trace the closed component for the witness.
    std::vector<VertexId> cycle;
    EdgeId in = e;
    VertexId w = h.edge(e).v;
    for (long long guard = 0; guard <= walk_limit; ++guard) {
      cycle.push_back(w);
      const EdgeId out = opposite(in, w);
      w = h.other(out, w);
      in = out;
      if (in == e) break;
    }
    if (counters) counters->steps += steps;
    return reject(RejectionCode::PathIsCycle,
                  "opposite-edge component avoids v-infinity (edge " + std::to_string(e) + ")",
                  std::move(cycle));
  }

  std::vector<int> stamp(inf, -1);
  for (int id = 0; id < static_cast<int>(paths.size()); ++id) {
    for (VertexId v : paths[id]) {
      ++steps;
      if (stamp[v] == id) {
        if (counters) counters->steps += steps;
        return reject(RejectionCode::PathSelfCrosses,
                      "path " + std::to_string(id) + " passes vertex " + std::to_string(v) + " twice",
                      paths[id]);
      }
      stamp[v] = id;
    }
  }

  PathDecomposition out;
  out.pseudolines.reserve(paths.size());
  for (int id = 0; id < static_cast<int>(paths.size()); ++id) {
    out.pseudolines.push_back(Pseudoline{id, std::move(paths[id])});
  }
  out.boundary.reserve(at_inf.size());
  for (EdgeId e : at_inf) out.boundary.push_back(end_of[e]);
  if (counters) counters->steps += steps;
  return out;
}

std::optional<std::pair<VertexId, VertexId>> find_repeated_pair(
    int line_count, const std::vector<Membership>& membership, RecognizeCounters* counters) {
  const int n = static_cast<int>(membership.size());
  std::vector<VertexId> order(n), scratch(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  // Two stable counting-sort passes: by the larger line id, then the smaller.
  auto pass = [&](auto key) {
    std::vector<int> count(line_count + 1, 0);
    for (VertexId v : order) ++count[key(v) + 1];
    for (int b = 0; b < line_count; ++b) count[b + 1] += count[b];
    for (VertexId v : order) scratch[count[key(v)]++] = v;
    order.swap(scratch);
    if (counters) counters->steps += 2LL * n + line_count;
  };
  pass([&](VertexId v) { return membership[v].line_b; });
  pass([&](VertexId v) { return membership[v].line_a; });
  for (int i = 1; i < n; ++i) {
    const Membership& a = membership[order[i - 1]];
    const Membership& b = membership[order[i]];
    if (a.line_a == b.line_a && a.line_b == b.line_b) return std::pair{order[i - 1], order[i]};
  }
  return std::nullopt;
}

Expected<ArrangementStructure, RejectionReason> recognize(const Graph& g, RecognizeCounters* counters) {
  const int n = g.vertex_count();
  if (n < 3) {
    return reject(RejectionCode::TooSmall,
                  "n = " + std::to_string(n) + "; at least three pseudolines (n >= 3) are required");
  }
  if (auto violation = validate_graph(g)) {
    switch (violation->kind) {
      case ViolationKind::SelfLoop:
      case ViolationKind::MultiEdge:
        throw std::invalid_argument("recognize: " + violation->message);
      case ViolationKind::DegreeTooHigh:
        return reject(RejectionCode::BadDegree, violation->message, violation->witness);
      case ViolationKind::Disconnected:
        return reject(RejectionCode::Disconnected, violation->message, violation->witness);
    }
  }
  long long infinity_edges = 0;
  for (VertexId v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d < 2) {
      return reject(RejectionCode::BadDegree,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(d), {v});
    }
    infinity_edges += 4 - d;
  }
  if (counters) counters->steps += n;

  if (auto base = planar_embed(g); !base) return base.error();

  // Every path consumes two v-infinity edges, so the path count is known now.
  if (infinity_edges % 2 != 0 || triangular(infinity_edges / 2) != n) {
    return reject(RejectionCode::WrongVertexCount,
                  std::to_string(infinity_edges) + " path ends give " +
                      std::to_string(infinity_edges / 2) + " paths, which cannot have " +
                      std::to_string(n) + " pairwise crossings");
  }

  auto aug = augment(g);
  if (!aug) return aug.error();
  canonicalize(*aug);

  auto dec = path_decompose(*aug, counters);
  if (!dec) return dec.error();

  const int l = static_cast<int>(dec->pseudolines.size());
  if (triangular(l) != n) {
    return reject(RejectionCode::WrongVertexCount,
                  std::to_string(l) + " paths need " + std::to_string(triangular(l)) +
                      " vertices, graph has " + std::to_string(n));
  }

  ArrangementStructure s;
  s.membership = build_membership(n, dec->pseudolines);
  if (counters) counters->steps += n;
  if (auto dup = find_repeated_pair(l, s.membership, counters)) {
    const Membership& m = s.membership[dup->first];
    return reject(RejectionCode::PairMultiCross,
                  "paths " + std::to_string(m.line_a) + " and " + std::to_string(m.line_b) +
                      " cross more than once",
                  {dup->first, dup->second});
  }

  s.graph = g;
  s.rotation.order.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : aug->rotation.order[v]) {
      if (!aug->is_augmentation_edge(e)) s.rotation.order[v].push_back(e);
    }
  }
  if (counters) counters->steps += 4LL * n;
  s.pseudolines = std::move(dec->pseudolines);
  s.boundary = std::move(dec->boundary);
  return s;
}

}  // namespace arrangeline
