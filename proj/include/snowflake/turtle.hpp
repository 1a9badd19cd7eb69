#pragma once

#include <cstdint>
#include <vector>

#include "snowflake/words.hpp"

namespace snowflake {

enum class Heading : std::uint8_t { East = 0, North = 1, West = 2, South = 3 };

constexpr Heading turn_left(Heading h) noexcept {
  return static_cast<Heading>((static_cast<std::uint8_t>(h) + 1) % 4);
}
constexpr Heading turn_right(Heading h) noexcept {
  return static_cast<Heading>((static_cast<std::uint8_t>(h) + 3) % 4);
}

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct RealPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const RealPoint&, const RealPoint&) = default;
};

/// Vertices of a polygonal line made of unit axis-aligned steps on Z^2.
/// Segment count is always vertices().size() - 1.
class LatticePath {
 public:
  /// Validates the unit-step invariant; throws InvalidInput on violation.
  explicit LatticePath(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t segment_count() const noexcept { return vertices_.size() - 1; }
  const LatticePoint& front() const { return vertices_.front(); }
  const LatticePoint& back() const { return vertices_.back(); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  struct Trusted {};
  LatticePath(std::vector<LatticePoint> vertices, Trusted) : vertices_(std::move(vertices)) {}
  friend LatticePath trace(const TurnWord&);

  std::vector<LatticePoint> vertices_;
};

struct PathClass {
  bool closed = false;
  bool non_intersecting = false;

  friend bool operator==(const PathClass&, const PathClass&) = default;
};

struct BoundingBox {
  LatticePoint min;
  LatticePoint max;

  std::int64_t width() const noexcept { return max.x - min.x; }
  std::int64_t height() const noexcept { return max.y - min.y; }
};

/// Starts at (0,0) heading East and draws one unit segment; each letter then
/// turns a quarter (L counterclockwise, R clockwise) and draws another.
LatticePath trace(const TurnWord& w);

/// Closed iff the extremities coincide. Non-intersecting iff no vertex is
/// visited twice, the shared extremities of a closed path excepted.
PathClass classify(const LatticePath& path);

BoundingBox bounding_box(const LatticePath& path);

/// trace(snowflake_word(n)).
LatticePath snowflake_path(int n, int order_cap = kDefaultOrderCap);

}  // namespace snowflake
