#ifndef ARRANGELINE_UNIVERSAL_POINTS_HPP
#define ARRANGELINE_UNIVERSAL_POINTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrangeline/core.hpp"
#include "arrangeline/grid_draw.hpp"

namespace arrangeline {

/// i XOR (i-1) for i >= 1, i.e. 2^(1 + v2(i)) - 1.
constexpr std::uint64_t xi(std::uint64_t i) { return i ^ (i - 1); }

/// Exact sum of xi(1..s).
std::uint64_t xi_prefix_sum(std::uint64_t s);

/// ceil(3(l-1)/2), the number of point-set rows.
int universal_row_count(int l);

/// ceil(2 * l^(4/3)), computed exactly as the least W with W^3 >= 8 l^4.
std::int64_t default_width_cap(int l);

/// Row i (1-based) holds the row_counts[i-1] leftmost columns of an s x W grid.
struct UniversalPointSet {
  int l = 0;
  int s = 0;
  std::int64_t width_cap = 0;
  std::vector<std::int64_t> row_counts;

  std::int64_t point_count() const;
  bool contains(const Point& p) const;
  std::vector<Point> points() const;
};

/// Throws std::invalid_argument if l < 3 or width_cap < l.
UniversalPointSet universal_points(int l, std::optional<std::int64_t> width_cap = std::nullopt);

struct RowMatch {
  std::vector<std::int64_t> alphas;
  /// 1-based, strictly increasing, xi(assigned_rows[i]) >= alphas[i].
  std::vector<int> assigned_rows;
};

enum class EmbedErrorCode { NoMatch, WidthExceeded, HeightMismatch };

struct EmbedError {
  EmbedErrorCode code;
  std::string detail;
};

/// Greedy leftmost matching of alphas into xi(1..s).
Expected<RowMatch, EmbedError> match_rows(const std::vector<std::int64_t>& alphas, int s);

/// Maps drawing row i onto point-set row r_i, keeping within-row x order and
/// packing each row to the left.
Expected<GridDrawing, EmbedError> embed_on(const GridDrawing& drawing, const UniversalPointSet& ups);

}  // namespace arrangeline

#endif  // ARRANGELINE_UNIVERSAL_POINTS_HPP
