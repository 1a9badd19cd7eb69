#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "snowflake/error.hpp"
#include "snowflake/hull.hpp"

using namespace snowflake;

namespace {

long long orient(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool in_triangle(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b,
                 const LatticePoint& c) {
  const auto d1 = orient(a, b, p), d2 = orient(b, c, p), d3 = orient(c, a, p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

// p is extreme iff it is not in the hull of the other points; by Caratheodory it
// suffices to test triangles and segments of the others.
std::set<LatticePoint> brute_extreme(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::set<LatticePoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool covered = false;
    for (std::size_t a = 0; a < pts.size() && !covered; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < pts.size() && !covered; ++b) {
        if (b == i) continue;
        if (on_segment(pts[i], pts[a], pts[b])) covered = true;
        for (std::size_t c = b + 1; c < pts.size() && !covered; ++c) {
          if (c == i) continue;
          if (orient(pts[a], pts[b], pts[c]) != 0 && in_triangle(pts[i], pts[a], pts[b], pts[c])) {
            covered = true;
          }
        }
      }
    }
    if (!covered) out.insert(pts[i]);
  }
  return out;
}

double brute_diameter(const ConvexHull& h) {
  double best = 0.0;
  for (const auto& a : h.vertices) {
    for (const auto& b : h.vertices) {
      best = std::max(best, std::hypot(double(a.x - b.x), double(a.y - b.y)));
    }
  }
  return best;
}

std::vector<LatticePoint> random_points(std::mt19937_64& rng, int count, int span) {
  std::uniform_int_distribution<int> coord(-span, span);
  std::vector<LatticePoint> out;
  for (int i = 0; i < count; ++i) out.push_back({coord(rng), coord(rng)});
  return out;
}

}  // namespace

TEST_CASE("convex_hull basic shapes") {
  const std::vector<LatticePoint> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto h = convex_hull(square);
  CHECK(h.vertices == std::vector<LatticePoint>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(perimeter(h) == doctest::Approx(4.0));
  CHECK(diameter(h) == doctest::Approx(std::sqrt(2.0)));

  const std::vector<LatticePoint> line{{0, 0}, {1, 0}, {2, 0}};
  const auto seg = convex_hull(line);
  CHECK(seg.vertices == std::vector<LatticePoint>{{0, 0}, {2, 0}});
  CHECK(perimeter(seg) == doctest::Approx(4.0));

  const std::vector<LatticePoint> two{{0, 0}, {3, 4}};
  CHECK(diameter(convex_hull(two)) == doctest::Approx(5.0));

  const std::vector<LatticePoint> same{{2, 2}, {2, 2}};
  const auto dot = convex_hull(same);
  CHECK(dot.vertices.size() == 1);
  CHECK(perimeter(dot) == 0.0);
  CHECK(diameter(dot) == 0.0);

  CHECK_THROWS_AS(convex_hull(std::vector<LatticePoint>{}), InvalidInput);
}

TEST_CASE("hull of the order-1 snowflake") {
  const auto path = snowflake_path(1);
  const auto h = convex_hull(path.vertices());
  CHECK(h.vertices == std::vector<LatticePoint>{{1, -1}, {2, -1}, {3, 0}, {3, 1}, {2, 2}, {1, 2},
                                                {0, 1}, {0, 0}});
  CHECK(perimeter(h) == doctest::Approx(4.0 + 4.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(diameter(h) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));
}

TEST_CASE("hull vertices match the extreme-point oracle on small random sets") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 400; ++trial) {
    const auto pts = random_points(rng, 1 + trial % 12, trial % 3 == 0 ? 2 : 6);
    const auto h = convex_hull(pts);
    const std::set<LatticePoint> got(h.vertices.begin(), h.vertices.end());
    REQUIRE(got.size() == h.vertices.size());
    REQUIRE(got == brute_extreme(pts));
  }
}

TEST_CASE("random hulls contain their points and calipers match the pairwise diameter") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = random_points(rng, 3 + trial % 198, 50);
    const auto h = convex_hull(pts);
    for (const auto& p : pts) REQUIRE(contains(h, p));
    // strictly convex, counterclockwise
    if (h.vertices.size() >= 3) {
      for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        const auto& a = h.vertices[i];
        const auto& b = h.vertices[(i + 1) % h.vertices.size()];
        const auto& c = h.vertices[(i + 2) % h.vertices.size()];
        REQUIRE(orient(a, b, c) > 0);
      }
      const double per = perimeter(h), dia = diameter(h);
      REQUIRE(2.0 * dia <= per + 1e-12);
      REQUIRE(per <= std::numbers::pi * dia + 1e-12);
    }
    REQUIRE(diameter(h) == doctest::Approx(brute_diameter(h)).epsilon(1e-15));
  }
}

TEST_CASE("snowflake hulls: perimeter bounds and caliper diameter") {
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    const auto path = snowflake_path(n);
    const auto h = convex_hull(path.vertices());
    const double per = perimeter(h), dia = diameter(h);
    CHECK(per <= static_cast<double>(path.segment_count()));
    CHECK(2.0 * dia <= per);
    CHECK(per <= std::numbers::pi * dia);
    CHECK(dia == doctest::Approx(brute_diameter(h)).epsilon(1e-15));
  }
}
