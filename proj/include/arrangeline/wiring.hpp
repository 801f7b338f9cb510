#ifndef ARRANGELINE_WIRING_HPP
#define ARRANGELINE_WIRING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrangeline/core.hpp"

namespace arrangeline {

struct Crossing {
  VertexId vertex = 0;
  /// Swaps the pseudolines on tracks level and level+1 (1-based).
  int level = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct WiringDiagram {
  int l = 0;
  /// initial_tracks[t] is the pseudoline on track t+1 (track 1 is the bottom).
  std::vector<int> initial_tracks;
  std::vector<Crossing> crossings;
  int cut_index = 0;

  friend bool operator==(const WiringDiagram&, const WiringDiagram&) = default;
};

struct LevelStats {
  /// sizes[i] = |L(i+1)|
  std::vector<int> sizes;
  int kappa = 0;
};

/// A structure with a chosen sweep origin: every pseudoline is directed away
/// from its end inside the cut window.
struct OrientedArrangement {
  int l = 0;
  int vertex_count = 0;
  int cut_index = 0;
  std::vector<int> initial_tracks;
  /// sequences[p] = crossings of pseudoline p in sweep order.
  std::vector<std::vector<VertexId>> sequences;
};

enum class WiringErrorCode { InvalidCut, Stuck };

struct WiringError {
  WiringErrorCode code;
  std::string detail;
};

/// Window of l consecutive path ends starting at `cut` in the cyclic order
/// around v∞; window position j gets track l-j.
Expected<OrientedArrangement, WiringError> choose_cut(const ArrangementStructure& s, int cut);

/// Cut indices in 0..2l-1 whose window is a transversal of the pseudolines.
std::vector<int> valid_cuts(const ArrangementStructure& s);

struct WiringOptions {
  /// When set, ready crossings are popped in seeded random order instead of
  /// lowest track first.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Ready-crossing simulation: keep the track permutation and repeatedly fire
/// a crossing whose two pseudolines are on adjacent tracks and have it as
/// their next pending crossing.
Expected<WiringDiagram, WiringError> build_wiring(const OrientedArrangement& oriented,
                                                  const WiringOptions& options = {});

/// choose_cut + build_wiring at the smallest valid cut.
Expected<WiringDiagram, WiringError> default_wiring(const ArrangementStructure& s);

LevelStats level_stats(const WiringDiagram& d);

/// Track permutation after all crossings fire. Throws std::invalid_argument
/// if a level is out of range.
std::vector<int> final_tracks(const WiringDiagram& d);

/// Crossing sequence of every pseudoline in diagram order.
std::vector<std::vector<VertexId>> wire_sequences(const WiringDiagram& d);

}  // namespace arrangeline

#endif  // ARRANGELINE_WIRING_HPP
