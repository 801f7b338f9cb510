#include "arrangeline/wiring.hpp"

#include <algorithm>
#include <set>

#include "arrangeline/random.hpp"

namespace arrangeline {

Expected<OrientedArrangement, WiringError> choose_cut(const ArrangementStructure& s, int cut) {
  const int l = s.line_count();
  const int ends = static_cast<int>(s.boundary.size());
  if (ends != 2 * l || cut < 0 || cut >= ends) {
    return WiringError{WiringErrorCode::InvalidCut,
                       "cut " + std::to_string(cut) + " outside 0.." + std::to_string(ends - 1)};
  }
  OrientedArrangement o;
  o.l = l;
  o.vertex_count = s.graph.vertex_count();
  o.cut_index = cut;
  o.initial_tracks.assign(l, -1);
  o.sequences.resize(l);
  std::vector<char> taken(l, 0);
  for (int j = 0; j < l; ++j) {
    const PathEnd& end = s.boundary[(cut + j) % ends];
    if (taken[end.line]) {
      return WiringError{WiringErrorCode::InvalidCut,
                         "cut " + std::to_string(cut) + " window meets pseudoline " +
                             std::to_string(end.line) + " twice"};
    }
    taken[end.line] = 1;
    o.initial_tracks[l - 1 - j] = end.line;
    auto seq = s.pseudolines[end.line].crossings;
    if (!end.at_front) std::reverse(seq.begin(), seq.end());
    o.sequences[end.line] = std::move(seq);
  }
  return o;
}

std::vector<int> valid_cuts(const ArrangementStructure& s) {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(s.boundary.size()); ++c) {
    if (choose_cut(s, c)) out.push_back(c);
  }
  return out;
}

Expected<WiringDiagram, WiringError> build_wiring(const OrientedArrangement& o,
                                                  const WiringOptions& options) {
  const int l = o.l;
  WiringDiagram d;
  d.l = l;
  d.initial_tracks = o.initial_tracks;
  d.cut_index = o.cut_index;

  std::size_t total = 0;
  for (const auto& seq : o.sequences) total += seq.size();
  total /= 2;
  d.crossings.reserve(total);

  std::vector<int> tracks = o.initial_tracks;
  std::vector<std::size_t> next(l, 0);
  // gap i lies between tracks i and i+1 (0-based), i.e. level i+1
  auto is_ready = [&](int i) {
    const int p = tracks[i];
    const int q = tracks[i + 1];
    return next[p] < o.sequences[p].size() && next[q] < o.sequences[q].size() &&
           o.sequences[p][next[p]] == o.sequences[q][next[q]];
  };

  std::set<int> ready;
  for (int i = 0; i + 1 < l; ++i) {
    if (is_ready(i)) ready.insert(i);
  }
  std::optional<SplitMix64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  while (d.crossings.size() < total) {
    if (ready.empty()) {
      return WiringError{WiringErrorCode::Stuck,
                         "no ready crossing after " + std::to_string(d.crossings.size()) + " of " +
                             std::to_string(total)};
    }
    auto it = ready.begin();
    if (rng) std::advance(it, static_cast<long>(rng->below(ready.size())));
    const int i = *it;
    const int p = tracks[i];
    const int q = tracks[i + 1];
    d.crossings.push_back(Crossing{o.sequences[p][next[p]], i + 1});
    ++next[p];
    ++next[q];
    std::swap(tracks[i], tracks[i + 1]);
    for (int j = std::max(0, i - 1); j <= std::min(l - 2, i + 1); ++j) {
      if (is_ready(j)) {
        ready.insert(j);
      } else {
        ready.erase(j);
      }
    }
  }
  return d;
}

Expected<WiringDiagram, WiringError> default_wiring(const ArrangementStructure& s) {
  for (int c = 0; c < static_cast<int>(s.boundary.size()); ++c) {
    auto o = choose_cut(s, c);
    if (o) return build_wiring(*o);
  }
  return WiringError{WiringErrorCode::InvalidCut, "no valid cut"};
}

LevelStats level_stats(const WiringDiagram& d) {
  LevelStats st;
  st.sizes.assign(std::max(0, d.l - 1), 0);
  for (const Crossing& c : d.crossings) {
    if (c.level < 1 || c.level >= d.l) throw std::invalid_argument("crossing level out of range");
    ++st.sizes[c.level - 1];
  }
  st.kappa = st.sizes.empty() ? 0 : *std::max_element(st.sizes.begin(), st.sizes.end());
  return st;
}

std::vector<int> final_tracks(const WiringDiagram& d) {
  std::vector<int> tracks = d.initial_tracks;
  for (const Crossing& c : d.crossings) {
    if (c.level < 1 || c.level >= d.l) throw std::invalid_argument("crossing level out of range");
    std::swap(tracks[c.level - 1], tracks[c.level]);
  }
  return tracks;
}

std::vector<std::vector<VertexId>> wire_sequences(const WiringDiagram& d) {
  std::vector<std::vector<VertexId>> seq(d.l);
  std::vector<int> tracks = d.initial_tracks;
  for (const Crossing& c : d.crossings) {
    if (c.level < 1 || c.level >= d.l) throw std::invalid_argument("crossing level out of range");
    seq[tracks[c.level - 1]].push_back(c.vertex);
    seq[tracks[c.level]].push_back(c.vertex);
    std::swap(tracks[c.level - 1], tracks[c.level]);
  }
  return seq;
}

}  // namespace arrangeline
