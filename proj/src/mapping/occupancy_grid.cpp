#include "rpf/mapping/occupancy_grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace rpf::mapping {

OccupancyGrid::OccupancyGrid(const GridGeometry& geo) : geo_(geo) {
  logOdds_.assign(geo_.cellCount(), 0.0f);
  obsCount_.assign(geo_.cellCount(), 0);
}

void OccupancyGrid::adjust(const CellIndex& c, double delta) {
  float& l = logOdds_[geo_.index(c)];
  const bool was = static_cast<double>(l) > kOccupiedLogOdds;
  l = static_cast<float>(std::clamp(static_cast<double>(l) + delta,
                                    -kLogOddsMax, kLogOddsMax));
  if ((static_cast<double>(l) > kOccupiedLogOdds) != was) ++occupiedRevision_;
  ++obsCount_[geo_.index(c)];
}

void OccupancyGrid::addHit(const CellIndex& c) { adjust(c, kLogOddsHit); }

void OccupancyGrid::addMiss(const CellIndex& c) { adjust(c, kLogOddsMiss); }

OccupancyGrid::FreeBounds OccupancyGrid::knownFreeBounds() const {
  FreeBounds b;
  for (int y = 0; y < geo_.height; ++y) {
    for (int x = 0; x < geo_.width; ++x) {
      if (!isFree({x, y})) continue;
      const Vec2 c = geo_.cellCenter({x, y});
      if (b.empty) {
        b.lo = b.hi = c;
        b.empty = false;
      } else {
        b.lo = b.lo.cwiseMin(c);
        b.hi = b.hi.cwiseMax(c);
      }
    }
  }
  return b;
}

void OccupancyGrid::writePgm(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "P5\n" << geo_.width << " " << geo_.height << "\n255\n";
  for (int y = geo_.height - 1; y >= 0; --y) {
    for (int x = 0; x < geo_.width; ++x) {
      uint8_t v = 127;
      if (isOccupied({x, y})) v = 0;
      else if (isFree({x, y})) v = 255;
      out.put(static_cast<char>(v));
    }
  }
}

namespace {

// First intersection parameter t in [0, maxT] of ray o + t*d (|d| = 1) with a
// circle, or maxT when it misses.
double rayCircle(const Vec2& o, const Vec2& d, const Vec2& center, double radius, double maxT) {
  const Vec2 oc = o - center;
  const double b = oc.dot(d);
  const double c = oc.squaredNorm() - radius * radius;
  const double disc = b * b - c;
  if (disc < 0) return maxT;
  const double t = -b - std::sqrt(disc);
  if (t < 0 || t > maxT) return maxT;
  return t;
}

}  // namespace

void integrateScan(OccupancyGrid& grid, const sim::WorldMap& world, const Vec2& sensorPos,
                   const std::vector<sim::AgentState>& agents, const LidarParams& lidar) {
  const GridGeometry& geo = grid.geometry();
  std::vector<CellIndex> freeCells;
  freeCells.reserve(256);
  for (int k = 0; k < lidar.rayCount; ++k) {
    const double ang = 2.0 * M_PI * k / lidar.rayCount;
    const Vec2 dir(std::cos(ang), std::sin(ang));

    double range = lidar.maxRange;
    for (const auto& a : agents) range = rayCircle(sensorPos, dir, a.position, a.radius, range);
    const bool hitPerson = range < lidar.maxRange - 1e-9;

    // March along the true map to find the wall hit, updating the belief grid.
    bool hitWall = false;
    CellIndex hitCell{};
    freeCells.clear();
    traverseRay(geo, sensorPos, sensorPos + dir * range, [&](const CellIndex& c) {
      if (world.occupied(c)) {
        hitWall = true;
        hitCell = c;
        return false;
      }
      freeCells.push_back(c);
      return true;
    });
    if (!hitWall && hitPerson && !freeCells.empty() &&
        freeCells.back() == geo.worldToCell(sensorPos + dir * range)) {
      hitWall = true;  // treat the person cell as this ray's return
      hitCell = freeCells.back();
      freeCells.pop_back();
    }
    for (const auto& c : freeCells) grid.addMiss(c);
    if (hitWall) grid.addHit(hitCell);
  }
}

}  // namespace rpf::mapping
