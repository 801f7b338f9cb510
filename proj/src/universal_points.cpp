#include "arrangeline/universal_points.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arrangeline {

std::uint64_t xi_prefix_sum(std::uint64_t s) {
  // #{i <= s : v2(i) = k} = floor(s/2^k) - floor(s/2^(k+1)), each contributing 2^(k+1) - 1.
  std::uint64_t sum = 0;
  for (int k = 0; k < 63 && (s >> k) != 0; ++k) {
    const std::uint64_t count = (s >> k) - (s >> (k + 1));
    sum += count * ((std::uint64_t{2} << k) - 1);
  }
  return sum;
}

int universal_row_count(int l) { return (3 * (l - 1) + 1) / 2; }

std::int64_t default_width_cap(int l) {
  if (l < 1) throw std::invalid_argument("default_width_cap: l must be positive");
  using i128 = __int128;
  const i128 target = i128{8} * l * l * l * l;
  auto w = static_cast<std::int64_t>(std::ceil(2.0 * std::pow(static_cast<double>(l), 4.0 / 3.0)));
  while (w > 0 && i128{w - 1} * (w - 1) * (w - 1) >= target) --w;
  while (i128{w} * w * w < target) ++w;
  return w;
}

std::int64_t UniversalPointSet::point_count() const {
  std::int64_t total = 0;
  for (auto c : row_counts) total += c;
  return total;
}

bool UniversalPointSet::contains(const Point& p) const {
  return p.y >= 0 && p.y < s && p.x >= 0 && p.x < row_counts[static_cast<std::size_t>(p.y)];
}

std::vector<Point> UniversalPointSet::points() const {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(point_count()));
  for (int r = 0; r < s; ++r) {
    for (std::int64_t x = 0; x < row_counts[r]; ++x) out.push_back(Point{x, r});
  }
  return out;
}

UniversalPointSet universal_points(int l, std::optional<std::int64_t> width_cap) {
  if (l < 3) throw std::invalid_argument("universal_points: l must be at least 3");
  UniversalPointSet ups;
  ups.l = l;
  ups.s = universal_row_count(l);
  ups.width_cap = width_cap.value_or(default_width_cap(l));
  if (ups.width_cap < l) {
    throw std::invalid_argument("universal_points: width cap " + std::to_string(ups.width_cap) +
                                " is below l = " + std::to_string(l));
  }
  ups.row_counts.reserve(ups.s);
  for (int i = 1; i <= ups.s; ++i) {
    const auto row = static_cast<std::int64_t>(xi(static_cast<std::uint64_t>(i)));
    // l * xi(i) <= l * 2i, far from overflow for any realistic l
    ups.row_counts.push_back(std::min<std::int64_t>(static_cast<std::int64_t>(l) * row, ups.width_cap));
  }
  return ups;
}

Expected<RowMatch, EmbedError> match_rows(const std::vector<std::int64_t>& alphas, int s) {
  RowMatch m;
  m.alphas = alphas;
  m.assigned_rows.reserve(alphas.size());
  int row = 1;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (alphas[k] < 1) throw std::invalid_argument("match_rows: alphas must be positive");
    while (row <= s && static_cast<std::int64_t>(xi(static_cast<std::uint64_t>(row))) < alphas[k]) ++row;
    if (row > s) {
      return EmbedError{EmbedErrorCode::NoMatch, "alpha #" + std::to_string(k + 1) + " = " +
                                                      std::to_string(alphas[k]) +
                                                      " has no remaining row among the first " +
                                                      std::to_string(s)};
    }
    m.assigned_rows.push_back(row++);
  }
  return m;
}

Expected<GridDrawing, EmbedError> embed_on(const GridDrawing& drawing, const UniversalPointSet& ups) {
  const std::int64_t rows = drawing.height;
  if (rows != ups.l - 1) {
    return EmbedError{EmbedErrorCode::HeightMismatch,
                      "drawing has " + std::to_string(rows) + " rows, point set expects " +
                          std::to_string(ups.l - 1)};
  }
  // Vertices of each row in x order.
  std::vector<std::vector<VertexId>> by_row(static_cast<std::size_t>(rows));
  for (VertexId v = 0; v < static_cast<VertexId>(drawing.positions.size()); ++v) {
    by_row[static_cast<std::size_t>(drawing.positions[v].y)].push_back(v);
  }
  std::vector<std::int64_t> alphas;
  alphas.reserve(by_row.size());
  for (auto& row : by_row) {
    std::sort(row.begin(), row.end(), [&](VertexId a, VertexId b) {
      return drawing.positions[a].x < drawing.positions[b].x;
    });
    const auto count = static_cast<std::int64_t>(row.size());
    alphas.push_back(std::max<std::int64_t>(1, (count + ups.l - 1) / ups.l));
  }
  auto match = match_rows(alphas, ups.s);
  if (!match) return match.error();

  GridDrawing out;
  out.edges = drawing.edges;
  out.positions.resize(drawing.positions.size());
  for (std::size_t i = 0; i < by_row.size(); ++i) {
    const int target = match->assigned_rows[i];
    const std::int64_t capacity = ups.row_counts[static_cast<std::size_t>(target - 1)];
    if (static_cast<std::int64_t>(by_row[i].size()) > capacity) {
      return EmbedError{EmbedErrorCode::WidthExceeded,
                        "drawing row " + std::to_string(i) + " has " + std::to_string(by_row[i].size()) +
                            " vertices, point-set row " + std::to_string(target) + " holds " +
                            std::to_string(capacity)};
    }
    for (std::size_t k = 0; k < by_row[i].size(); ++k) {
      out.positions[static_cast<std::size_t>(by_row[i][k])] =
          Point{static_cast<std::int64_t>(k), target - 1};
    }
  }
  out.update_extent();
  return out;
}

}  // namespace arrangeline
