#include "rpf/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace rpf {

// Amanatides-Woo grid traversal.
void traverseRay(const GridGeometry& geo, const Vec2& from, const Vec2& to,
                 const std::function<bool(const CellIndex&)>& visit) {
  CellIndex cell = geo.worldToCell(from);
  const CellIndex last = geo.worldToCell(to);
  if (!geo.inBounds(cell)) return;
  if (!visit(cell)) return;
  if (cell == last) return;

  const Vec2 d = to - from;
  const double len = d.norm();
  if (len < 1e-12) return;
  const Vec2 dir = d / len;

  const int stepX = dir.x() > 0 ? 1 : (dir.x() < 0 ? -1 : 0);
  const int stepY = dir.y() > 0 ? 1 : (dir.y() < 0 ? -1 : 0);

  auto boundary = [&](int cellCoord, int step, double originCoord) {
    return originCoord + (cellCoord + (step > 0 ? 1 : 0)) * geo.resolution;
  };

  double tMaxX = std::numeric_limits<double>::infinity();
  double tMaxY = std::numeric_limits<double>::infinity();
  double tDeltaX = std::numeric_limits<double>::infinity();
  double tDeltaY = std::numeric_limits<double>::infinity();
  if (stepX != 0) {
    tMaxX = (boundary(cell.x, stepX, geo.origin.x()) - from.x()) / dir.x();
    tDeltaX = geo.resolution / std::abs(dir.x());
  }
  if (stepY != 0) {
    tMaxY = (boundary(cell.y, stepY, geo.origin.y()) - from.y()) / dir.y();
    tDeltaY = geo.resolution / std::abs(dir.y());
  }

  while (true) {
    if (tMaxX < tMaxY) {
      if (tMaxX > len) return;
      cell.x += stepX;
      tMaxX += tDeltaX;
    } else {
      if (tMaxY > len) return;
      cell.y += stepY;
      tMaxY += tDeltaY;
    }
    if (!geo.inBounds(cell)) return;
    if (!visit(cell)) return;
    if (cell == last) return;
  }
}

}  // namespace rpf
