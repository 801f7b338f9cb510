#include "arrangeline/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "arrangeline/random.hpp"

namespace arrangeline {

namespace {

using i128 = __int128;

// Position of the crossing of p and q along p, as num/den with den > 0,
// measured along p's direction vector (b, -a).
struct Rational {
  i128 num;
  i128 den;
};

Rational position_along(const Line& p, const Line& q) {
  i128 den = i128{p.a} * q.b - i128{q.a} * p.b;
  const i128 nx = i128{p.c} * q.b - i128{q.c} * p.b;
  const i128 ny = i128{p.a} * q.c - i128{q.a} * p.c;
  i128 num = i128{p.b} * nx - i128{p.a} * ny;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  return {num, den};
}

bool less(const Rational& x, const Rational& y) { return x.num * y.den < y.num * x.den; }

}  // namespace

bool parallel(const Line& p, const Line& q) { return i128{p.a} * q.b - i128{q.a} * p.b == 0; }

bool concurrent(const Line& p, const Line& q, const Line& r) {
  const i128 det = i128{p.a} * (i128{q.b} * r.c - i128{r.b} * q.c) -
                   i128{p.b} * (i128{q.a} * r.c - i128{r.a} * q.c) +
                   i128{p.c} * (i128{q.a} * r.b - i128{r.a} * q.b);
  return det == 0;
}

GeneratedInstance random_lines(int l, std::uint64_t seed, const GeneratorOptions& options) {
  if (l < 3) throw std::invalid_argument("random_lines: l must be at least 3");
  const std::int64_t bound = options.coefficient_bound;
  SplitMix64 rng(seed);

  GeneratedInstance out;
  out.l = l;
  out.lines.seed = seed;
  auto& lines = out.lines.lines;
  for (int i = 0; i < l; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < options.redraw_budget && !placed; ++attempt) {
      const Line cand{rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
      if (cand.a == 0 && cand.b == 0) continue;
      bool ok = true;
      for (std::size_t j = 0; j < lines.size() && ok; ++j) ok = !parallel(lines[j], cand);
      for (std::size_t j = 0; j < lines.size() && ok; ++j) {
        for (std::size_t k = j + 1; k < lines.size() && ok; ++k) ok = !concurrent(lines[j], lines[k], cand);
      }
      if (ok) {
        lines.push_back(cand);
        placed = true;
      }
    }
    if (!placed) {
      throw GeneratorError("random_lines: line " + std::to_string(i) + " not placed within " +
                           std::to_string(options.redraw_budget) + " redraws");
    }
  }

  const int n = static_cast<int>(triangular(l));
  std::vector<VertexId> label(n);
  for (int k = 0; k < n; ++k) label[k] = k;
  shuffle(label, rng);
  // pair (i, j), i < j, has index sum_{r<i}(l-1-r) + (j-i-1)
  auto pair_index = [l](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * (2 * l - i - 1) / 2 + (j - i - 1);
  };

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(l) * (l - 2));
  out.ground_truth.resize(l);
  for (int i = 0; i < l; ++i) {
    std::vector<std::pair<Rational, int>> along;
    along.reserve(l - 1);
    for (int j = 0; j < l; ++j) {
      if (j != i) along.emplace_back(position_along(lines[i], lines[j]), j);
    }
    std::sort(along.begin(), along.end(),
              [](const auto& x, const auto& y) { return less(x.first, y.first); });
    auto& seq = out.ground_truth[i];
    for (const auto& [pos, j] : along) seq.push_back(label[pair_index(i, j)]);
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) edges.push_back({seq[k], seq[k + 1]});
  }
  out.graph = Graph(n, std::move(edges));

  std::vector<int> slot(n);
  for (int k = 0; k < n; ++k) slot[k] = k;
  shuffle(slot, rng);
  out.layout.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    const double angle = 2.0 * std::numbers::pi * slot[v] / n;
    out.layout[v] = {std::cos(angle), std::sin(angle)};
  }
  return out;
}

GeneratedInstance planarity_level(int i, std::uint64_t seed) {
  if (i < 1) throw std::invalid_argument("planarity_level: level must be at least 1");
  return random_lines(i + 3, seed);
}

WiringDiagram random_wiring(int l, std::uint64_t seed) {
  if (l < 2) throw std::invalid_argument("random_wiring: l must be at least 2");
  SplitMix64 rng(seed);
  WiringDiagram d;
  d.l = l;
  d.initial_tracks.resize(l);
  for (int t = 0; t < l; ++t) d.initial_tracks[t] = t;
  std::vector<int> tracks = d.initial_tracks;
  const int n = static_cast<int>(triangular(l));
  std::vector<int> open;
  for (int k = 0; k < n; ++k) {
    open.clear();
    for (int i = 0; i + 1 < l; ++i) {
      if (tracks[i] < tracks[i + 1]) open.push_back(i);
    }
    if (open.empty()) throw std::logic_error("random_wiring: no uncrossed adjacent pair");
    const int i = open[rng.below(open.size())];
    d.crossings.push_back(Crossing{k, i + 1});
    std::swap(tracks[i], tracks[i + 1]);
  }
  return d;
}

WiringDiagram max_kappa_wiring(int l, std::uint64_t seed, int rounds) {
  if (rounds < 1) throw std::invalid_argument("max_kappa_wiring: rounds must be positive");
  SplitMix64 seeds(seed);
  WiringDiagram best;
  int best_kappa = -1;
  for (int r = 0; r < rounds; ++r) {
    WiringDiagram d = random_wiring(l, seeds.next());
    const int kappa = level_stats(d).kappa;
    if (kappa > best_kappa) {
      best_kappa = kappa;
      best = std::move(d);
    }
  }
  return best;
}

WiringDiagram stacked(const WiringDiagram& d1, const WiringDiagram& d2) {
  const int a = d1.l;
  const int b = d2.l;
  const int n1 = static_cast<int>(d1.crossings.size());
  const int n2 = static_cast<int>(d2.crossings.size());
  for (const Crossing& c : d1.crossings) {
    if (c.vertex < 0 || c.vertex >= n1) throw std::invalid_argument("stacked: d1 vertex ids must be 0..n1-1");
  }
  WiringDiagram d;
  d.l = a + b;
  d.initial_tracks = d1.initial_tracks;
  for (int p : d2.initial_tracks) d.initial_tracks.push_back(p + a);
  d.crossings = d1.crossings;
  for (const Crossing& c : d2.crossings) d.crossings.push_back(Crossing{c.vertex + n1, c.level + a});
  // The topmost d1 wire climbs over all of d2, then the next one, and so on.
  VertexId next = n1 + n2;
  for (int i = a; i >= 1; --i) {
    for (int t = i; t < i + b; ++t) d.crossings.push_back(Crossing{next++, t});
  }
  return d;
}

WiringGraph graph_of(const WiringDiagram& d) {
  WiringGraph out;
  out.pseudolines = wire_sequences(d);
  std::vector<Edge> edges;
  for (const auto& seq : out.pseudolines) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) edges.push_back({seq[k], seq[k + 1]});
  }
  out.graph = Graph(static_cast<int>(d.crossings.size()), std::move(edges));
  return out;
}

}  // namespace arrangeline
