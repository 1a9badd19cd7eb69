#include "snowflake/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "snowflake/error.hpp"
#include "snowflake/words.hpp"

namespace snowflake {

RealPath normalize_snowflake(const LatticePath& path, int n) {
  const BoundingBox box = bounding_box(path);
  const auto side = static_cast<std::int64_t>(2 * pell(n + 1) - 1);
  if (box.width() != side || box.height() != side) {
    throw InvalidInput("normalize_snowflake: bounding box " + std::to_string(box.width()) + "x" +
                       std::to_string(box.height()) + " is not a square of side 2P(" +
                       std::to_string(n + 1) + ")-1 = " + std::to_string(side));
  }
  RealPath out;
  out.reserve(path.vertex_count());
  for (const auto& p : path.vertices()) {
    // integer offsets first, so the far corner divides to exactly 1.0
    out.push_back({static_cast<double>(p.x - box.min.x) / static_cast<double>(side),
                   static_cast<double>(p.y - box.min.y) / static_cast<double>(side)});
  }
  return out;
}

int max_admissible_k(const RealPath& path) {
  double longest = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    longest = std::max(longest, std::hypot(path[i].x - path[i - 1].x, path[i].y - path[i - 1].y));
  }
  if (longest <= 0.0) throw InvalidInput("max_admissible_k: path has no extent");
  int k = 0;
  while (std::ldexp(1.0, -(k + 1)) >= 4.0 * longest) ++k;
  return k;
}

BoxCountSeries box_count_series(const RealPath& path, int k_min, int k_max) {
  if (path.size() < 2) throw InvalidInput("box_count_series: path needs at least 2 vertices");
  if (k_min < 1 || k_min > k_max) {
    throw InvalidInput("box_count_series: need 1 <= k_min <= k_max");
  }
  const int admissible = max_admissible_k(path);
  if (k_max > admissible) {
    throw InvalidInput("box_count_series: k_max " + std::to_string(k_max) +
                       " is below the scale floor; maximum admissible k is " +
                       std::to_string(admissible));
  }
  for (const auto& p : path) {
    if (p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0) {
      throw InvalidInput("box_count_series: path must lie in the unit square");
    }
  }

  BoxCountSeries series;
  std::vector<std::uint64_t> cells;
  for (int k = k_min; k <= k_max; ++k) {
    const std::int64_t grid = std::int64_t{1} << k;
    const double scale = static_cast<double>(grid);
    auto cell = [&](double v) {
      return std::clamp(static_cast<std::int64_t>(std::floor(v * scale)), std::int64_t{0},
                        grid - 1);
    };
    cells.clear();
    for (std::size_t i = 1; i < path.size(); ++i) {
      const RealPoint& a = path[i - 1];
      const RealPoint& b = path[i];
      std::int64_t col0, col1, row0, row1;
      if (a.y == b.y) {
        row0 = row1 = cell(a.y);
        col0 = cell(std::min(a.x, b.x));
        col1 = cell(std::max(a.x, b.x));
      } else if (a.x == b.x) {
        col0 = col1 = cell(a.x);
        row0 = cell(std::min(a.y, b.y));
        row1 = cell(std::max(a.y, b.y));
      } else {
        throw InvalidInput("box_count_series: segment " + std::to_string(i - 1) +
                           " is not axis-aligned");
      }
      for (auto r = row0; r <= row1; ++r) {
        for (auto c = col0; c <= col1; ++c) {
          cells.push_back(static_cast<std::uint64_t>(r * grid + c));
        }
      }
    }
    std::sort(cells.begin(), cells.end());
    const auto distinct = std::unique(cells.begin(), cells.end()) - cells.begin();
    series.push_back({k, std::ldexp(1.0, -k), static_cast<std::uint64_t>(distinct)});
  }
  return series;
}

DimensionFit estimate_dimension(const BoxCountSeries& series) {
  if (series.size() < 3) throw InvalidInput("estimate_dimension: need at least 3 scales");
  const double n = static_cast<double>(series.size());
  double sx = 0, sy = 0;
  for (const auto& e : series) {
    if (e.count == 0) throw InvalidInput("estimate_dimension: zero box count");
    sx += e.k * std::log(2.0);
    sy += std::log(static_cast<double>(e.count));
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& e : series) {
    const double dx = e.k * std::log(2.0) - mx;
    const double dy = std::log(static_cast<double>(e.count)) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw InvalidInput("estimate_dimension: scales must differ");
  DimensionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  fit.k_min = series.front().k;
  fit.k_max = series.back().k;
  return fit;
}

double theoretical_dimension() {
  return std::log(2.0 + std::sqrt(5.0)) / std::log(1.0 + std::sqrt(2.0));
}

}  // namespace snowflake
