#include "snowflake/hull.hpp"

#include <algorithm>
#include <cmath>

#include "snowflake/error.hpp"

namespace snowflake {
namespace {

__extension__ using Wide = __int128;

// Twice the signed area of (o, a, b); positive for a counterclockwise turn.
Wide cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<Wide>(a.x - o.x) * (b.y - o.y) - static_cast<Wide>(a.y - o.y) * (b.x - o.x);
}

Wide dist2(const LatticePoint& a, const LatticePoint& b) {
  const Wide dx = a.x - b.x;
  const Wide dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double dist(const LatticePoint& a, const LatticePoint& b) {
  return std::hypot(static_cast<double>(a.x - b.x), static_cast<double>(a.y - b.y));
}

}  // namespace

ConvexHull convex_hull(std::span<const LatticePoint> points) {
  if (points.empty()) throw InvalidInput("convex_hull: empty point set");

  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return {std::move(pts)};

  // Andrew's monotone chain; "<= 0" pops collinear points so the hull is strict.
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);

  // all collinear: the chain collapses to the two endpoints
  if (h.size() < 2) h = {pts.front(), pts.back()};

  auto start = std::min_element(h.begin(), h.end(), [](const auto& a, const auto& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  std::rotate(h.begin(), start, h.end());
  return {std::move(h)};
}

double perimeter(const ConvexHull& hull) {
  const auto& v = hull.vertices;
  if (v.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    total += dist(v[i], v[(i + 1) % v.size()]);
  }
  return total;
}

double diameter(const ConvexHull& hull) {
  const auto& v = hull.vertices;
  const std::size_t h = v.size();
  if (h < 2) return 0.0;
  if (h == 2) return dist(v[0], v[1]);

  Wide best = 0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < h; ++i) {
    const std::size_t ni = (i + 1) % h;
    while (cross(v[i], v[ni], v[(j + 1) % h]) > cross(v[i], v[ni], v[j])) j = (j + 1) % h;
    best = std::max({best, dist2(v[i], v[j]), dist2(v[ni], v[j])});
  }
  return std::sqrt(static_cast<double>(best));
}

bool contains(const ConvexHull& hull, const LatticePoint& p) {
  const auto& v = hull.vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return v[0] == p;
  if (v.size() == 2) {
    return cross(v[0], v[1], p) == 0 && std::min(v[0].x, v[1].x) <= p.x &&
           p.x <= std::max(v[0].x, v[1].x) && std::min(v[0].y, v[1].y) <= p.y &&
           p.y <= std::max(v[0].y, v[1].y);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], p) < 0) return false;
  }
  return true;
}

}  // namespace snowflake
