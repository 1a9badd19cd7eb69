#pragma once

#include <cstdint>
#include <vector>

#include "snowflake/turtle.hpp"

namespace snowflake {

using RealPath = std::vector<RealPoint>;

struct BoxCount {
  int k = 0;
  double epsilon = 1.0;  // 2^-k
  std::uint64_t count = 0;
};

using BoxCountSeries = std::vector<BoxCount>;

struct DimensionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int k_min = 0;
  int k_max = 0;
};

/// Translates the bounding-box corner of the order-n polygon to the origin
/// and scales by 1 / (2 P(n+1) - 1), so it fills the unit square.
/// Throws InvalidInput if the box is not that square.
RealPath normalize_snowflake(const LatticePath& path, int n);

/// Largest k whose cell side 2^-k is still at least 4 segment lengths.
int max_admissible_k(const RealPath& path);

/// Cells of the 2^k x 2^k grid over [0,1)^2 touched by at least one segment,
/// for k = k_min..k_max. Coordinates equal to 1 are clamped into the last cell.
/// Segments must be axis-aligned.
BoxCountSeries box_count_series(const RealPath& path, int k_min, int k_max);

/// Least-squares slope of ln count against ln 2^k.
DimensionFit estimate_dimension(const BoxCountSeries& series);

/// ln(2 + sqrt 5) / ln(1 + sqrt 2) = 1.637938210...
double theoretical_dimension();

}  // namespace snowflake
