#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpf/geometry.hpp"

namespace rpf::sim {

// Ground-truth map. Rows are given top-to-bottom ('#' occupied, '.' free),
// matching how the ASCII reads; internally +y is up.
class WorldMap {
 public:
  WorldMap() = default;
  WorldMap(double resolution, const std::vector<std::string>& rows);

  const GridGeometry& geometry() const { return geo_; }
  bool occupied(const CellIndex& c) const {
    return !geo_.inBounds(c) || occupied_[geo_.index(c)];
  }
  bool occupiedAt(const Vec2& p) const { return occupied(geo_.worldToCell(p)); }

  // Distance from p to the first occupied cell along the segment p->q, or the
  // full segment length when the line is clear.
  bool segmentClear(const Vec2& from, const Vec2& to) const;

  // Distance from the circle center to the nearest point of any occupied cell
  // rectangle within `searchRadius`; returns searchRadius when none found.
  double clearance(const Vec2& p, double searchRadius) const;

  // Nearest point of any occupied cell rectangle within searchRadius.
  std::optional<Vec2> nearestOccupiedPoint(const Vec2& p, double searchRadius) const;

 private:
  GridGeometry geo_;
  std::vector<uint8_t> occupied_;
};

}  // namespace rpf::sim
