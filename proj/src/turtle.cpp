#include "snowflake/turtle.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "snowflake/error.hpp"

namespace snowflake {
namespace {

LatticePoint step(LatticePoint p, Heading h) {
  switch (h) {
    case Heading::East: return {p.x + 1, p.y};
    case Heading::North: return {p.x, p.y + 1};
    case Heading::West: return {p.x - 1, p.y};
    case Heading::South: return {p.x, p.y - 1};
  }
  return p;
}

struct PointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    // splitmix64 finalizer over the packed coordinates
    std::uint64_t z = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL ^
                      static_cast<std::uint64_t>(p.y);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

}  // namespace

LatticePath::LatticePath(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw InvalidInput("LatticePath needs at least 2 vertices");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const auto dx = vertices_[i].x - vertices_[i - 1].x;
    const auto dy = vertices_[i].y - vertices_[i - 1].y;
    if (std::abs(dx) + std::abs(dy) != 1) {
      throw InvalidInput("LatticePath: vertices " + std::to_string(i - 1) + " and " +
                         std::to_string(i) + " are not one unit step apart");
    }
  }
}

LatticePath trace(const TurnWord& w) {
  std::vector<LatticePoint> vertices;
  vertices.reserve(w.size() + 2);
  Heading h = Heading::East;
  LatticePoint p{0, 0};
  vertices.push_back(p);
  p = step(p, h);
  vertices.push_back(p);
  for (Turn t : w) {
    h = t == Turn::L ? turn_left(h) : turn_right(h);
    p = step(p, h);
    vertices.push_back(p);
  }
  return LatticePath(std::move(vertices), LatticePath::Trusted{});
}

PathClass classify(const LatticePath& path) {
  const auto& v = path.vertices();
  PathClass result;
  result.closed = path.front() == path.back();
  // A closed path legitimately repeats its first vertex at the end.
  const std::size_t distinct_needed = result.closed ? v.size() - 1 : v.size();
  std::unordered_set<LatticePoint, PointHash> seen;
  seen.reserve(distinct_needed);
  result.non_intersecting = true;
  for (std::size_t i = 0; i < distinct_needed; ++i) {
    if (!seen.insert(v[i]).second) {
      result.non_intersecting = false;
      break;
    }
  }
  return result;
}

BoundingBox bounding_box(const LatticePath& path) {
  BoundingBox box{path.front(), path.front()};
  for (const auto& p : path.vertices()) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
  }
  return box;
}

LatticePath snowflake_path(int n, int order_cap) { return trace(snowflake_word(n, order_cap)); }

}  // namespace snowflake
