#include "rpf/sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rpf::sim {

WorldMap::WorldMap(double resolution, const std::vector<std::string>& rows) {
  if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty map rows");
  geo_.resolution = resolution;
  geo_.height = static_cast<int>(rows.size());
  geo_.width = static_cast<int>(rows[0].size());
  geo_.origin = Vec2::Zero();
  occupied_.assign(geo_.cellCount(), 0);
  for (int r = 0; r < geo_.height; ++r) {
    if (static_cast<int>(rows[r].size()) != geo_.width)
      throw std::invalid_argument("ragged map rows");
    for (int x = 0; x < geo_.width; ++x) {
      const char ch = rows[r][x];
      if (ch != '#' && ch != '.') throw std::invalid_argument("map cell must be '#' or '.'");
      const int y = geo_.height - 1 - r;  // rows[0] is the top of the map
      occupied_[y * geo_.width + x] = (ch == '#') ? 1 : 0;
    }
  }
}

bool WorldMap::segmentClear(const Vec2& from, const Vec2& to) const {
  bool clear = true;
  traverseRay(geo_, from, to, [&](const CellIndex& c) {
    if (occupied_[geo_.index(c)]) {
      clear = false;
      return false;
    }
    return true;
  });
  return clear;
}

std::optional<Vec2> WorldMap::nearestOccupiedPoint(const Vec2& p, double searchRadius) const {
  const int r = static_cast<int>(std::ceil(searchRadius / geo_.resolution)) + 1;
  const CellIndex pc = geo_.worldToCell(p);
  double best = searchRadius;
  std::optional<Vec2> bestPoint;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      const CellIndex c{pc.x + dx, pc.y + dy};
      if (geo_.inBounds(c) && !occupied_[geo_.index(c)]) continue;
      const Vec2 lo = geo_.origin + Vec2(c.x * geo_.resolution, c.y * geo_.resolution);
      const Vec2 q(std::clamp(p.x(), lo.x(), lo.x() + geo_.resolution),
                   std::clamp(p.y(), lo.y(), lo.y() + geo_.resolution));
      const double d = (p - q).norm();
      if (d < best) {
        best = d;
        bestPoint = q;
      }
    }
  }
  return bestPoint;
}

double WorldMap::clearance(const Vec2& p, double searchRadius) const {
  const auto q = nearestOccupiedPoint(p, searchRadius);
  return q ? (p - *q).norm() : searchRadius;
}

}  // namespace rpf::sim
