#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "rpf/mapping/occupancy_grid.hpp"

namespace rpf::mapping {

struct PathQueryOptions {
  double inflateRadius = 0.4;  // occupied cells are dilated by this much
  double snapRadius = 1.0;     // endpoints inside the dilated zone snap to the nearest open cell
  bool unknownTraversable = true;
};

// Single-source shortest-path distances over the 8-connected grid (straight
// steps cost one resolution, diagonal steps sqrt(2) of it, no corner cutting).
class DistanceField {
 public:
  DistanceField(const GridGeometry& geo, std::vector<double> dist, CellIndex source)
      : geo_(geo), dist_(std::move(dist)), source_(source) {}

  static constexpr double kUnreachable = std::numeric_limits<double>::infinity();

  double at(const CellIndex& c) const {
    return geo_.inBounds(c) ? dist_[geo_.index(c)] : kUnreachable;
  }
  double atPosition(const Vec2& p) const { return at(geo_.worldToCell(p)); }
  const CellIndex& source() const { return source_; }
  const GridGeometry& geometry() const { return geo_; }

 private:
  GridGeometry geo_;
  std::vector<double> dist_;
  CellIndex source_;
};

// Throws std::invalid_argument when `from` lies inside a raw occupied cell.
// A `from` inside the dilated zone snaps outward within snapRadius.
DistanceField computeDistanceField(const OccupancyGrid& grid, const Vec2& from,
                                   const PathQueryOptions& opt = {});

std::optional<double> shortestDistance(const OccupancyGrid& grid, const Vec2& from,
                                       const Vec2& to, const PathQueryOptions& opt = {});

// Waypoint list from `from` to `to` (cell centers, last one at the goal cell),
// or nullopt when no traversable route exists.
std::optional<std::vector<Vec2>> planPath(const OccupancyGrid& grid, const Vec2& from,
                                          const Vec2& to, const PathQueryOptions& opt = {});

// Dilated obstacle mask used by the queries; exposed for candidate filtering.
std::vector<uint8_t> inflatedOccupancy(const OccupancyGrid& grid, double inflateRadius);

// Reuses the dilated mask until a cell crosses the occupied threshold or the
// radius changes. Dilation is the expensive part of every spatial query, and
// the occupied set settles quickly once an area has been scanned.
class InflationCache {
 public:
  const std::vector<uint8_t>& get(const OccupancyGrid& grid, double inflateRadius);

 private:
  uint64_t revision_ = ~0ull;
  double radius_ = -1.0;
  std::vector<uint8_t> mask_;
};

}  // namespace rpf::mapping
