#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace rpf {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

struct CellIndex {
  int x = 0;
  int y = 0;
  bool operator==(const CellIndex& o) const { return x == o.x && y == o.y; }
  bool operator!=(const CellIndex& o) const { return !(*this == o); }
};

// Shared geometry for the ground-truth map and the robot's occupancy grid.
// Cell (0,0) has its lower-left corner at `origin`; +y is up.
struct GridGeometry {
  double resolution = 0.25;
  int width = 0;
  int height = 0;
  Vec2 origin = Vec2::Zero();

  int cellCount() const { return width * height; }
  bool inBounds(const CellIndex& c) const {
    return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
  }
  int index(const CellIndex& c) const { return c.y * width + c.x; }
  CellIndex worldToCell(const Vec2& p) const {
    return CellIndex{static_cast<int>(std::floor((p.x() - origin.x()) / resolution)),
                     static_cast<int>(std::floor((p.y() - origin.y()) / resolution))};
  }
  Vec2 cellCenter(const CellIndex& c) const {
    return origin + Vec2((c.x + 0.5) * resolution, (c.y + 0.5) * resolution);
  }
  double worldWidth() const { return width * resolution; }
  double worldHeight() const { return height * resolution; }
};

// Visits every cell a segment passes through, in order, starting at the cell
// containing `from`. Stops early when the visitor returns false.
void traverseRay(const GridGeometry& geo, const Vec2& from, const Vec2& to,
                 const std::function<bool(const CellIndex&)>& visit);

inline Mat2 rotation2d(double angle) {
  return Eigen::Rotation2Dd(angle).toRotationMatrix();
}

inline double wrapAngle(double a) {
  while (a > M_PI) a -= 2.0 * M_PI;
  while (a < -M_PI) a += 2.0 * M_PI;
  return a;
}

// Deterministic xorshift-based generator. Episode results must be bit-stable
// across platforms, so no std::uniform_real_distribution here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t nextU64() {
    uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x;
  }
  double nextDouble() {  // [0, 1)
    return static_cast<double>(nextU64() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * nextDouble(); }

 private:
  uint64_t state_;
};

}  // namespace rpf
