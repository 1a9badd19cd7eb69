#pragma once

#include <span>
#include <vector>

#include "snowflake/turtle.hpp"

namespace snowflake {

/// Strictly extreme points in counterclockwise order, starting from the
/// lowest (then leftmost) vertex. Collinear boundary points are dropped.
/// A collinear input yields its two endpoints, a single repeated point one vertex.
struct ConvexHull {
  std::vector<LatticePoint> vertices;
};

ConvexHull convex_hull(std::span<const LatticePoint> points);

/// Euclidean boundary length. A two-vertex (segment) hull counts the segment
/// twice, which is the measure of lines meeting it; a point hull has 0.
double perimeter(const ConvexHull& hull);

/// Largest distance between two hull vertices, by rotating calipers.
double diameter(const ConvexHull& hull);

/// Exact test: p lies inside or on the boundary of the hull.
bool contains(const ConvexHull& hull, const LatticePoint& p);

}  // namespace snowflake
