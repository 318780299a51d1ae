#pragma once

#include <string>
#include <vector>

#include "rpf/geometry.hpp"
#include "rpf/sim/agent.hpp"
#include "rpf/sim/world.hpp"

namespace rpf::mapping {

// Log-odds occupancy grid plus a per-cell observation counter.
class OccupancyGrid {
 public:
  static constexpr double kLogOddsHit = 0.85;
  static constexpr double kLogOddsMiss = -0.4;
  static constexpr double kLogOddsMax = 4.6;
  static constexpr double kOccupiedThreshold = 0.65;
  static constexpr double kFreeThreshold = 0.35;
  // log(0.65 / 0.35), the log-odds form of the occupied threshold
  static constexpr double kOccupiedLogOdds = 0.6190392084062235;
  static constexpr double kUnknownBand = 0.1;  // |p - 0.5| below this counts as unknown

  OccupancyGrid() = default;
  explicit OccupancyGrid(const GridGeometry& geo);

  const GridGeometry& geometry() const { return geo_; }
  double logOdds(const CellIndex& c) const { return logOdds_[geo_.index(c)]; }
  double probability(const CellIndex& c) const {
    return 1.0 / (1.0 + std::exp(-logOdds_[geo_.index(c)]));
  }
  uint32_t observationCount(const CellIndex& c) const { return obsCount_[geo_.index(c)]; }

  bool isOccupied(const CellIndex& c) const { return probability(c) > kOccupiedThreshold; }
  bool isFree(const CellIndex& c) const { return probability(c) < kFreeThreshold; }
  bool isUnknown(const CellIndex& c) const {
    return std::abs(probability(c) - 0.5) < kUnknownBand;
  }

  void addHit(const CellIndex& c);
  void addMiss(const CellIndex& c);

  // Bumped whenever a cell crosses the occupied threshold in either direction,
  // so derived products (inflation masks) know when they are stale.
  uint64_t occupiedRevision() const { return occupiedRevision_; }

  // Axis-aligned bounding box of all known-free cells; empty() when none.
  struct FreeBounds {
    Vec2 lo, hi;
    bool empty = true;
    double diagonal() const { return empty ? 0.0 : (hi - lo).norm(); }
  };
  FreeBounds knownFreeBounds() const;

  void writePgm(const std::string& path) const;

 private:
  GridGeometry geo_;
  std::vector<float> logOdds_;
  std::vector<uint32_t> obsCount_;
  uint64_t occupiedRevision_ = 0;

  void adjust(const CellIndex& c, double delta);
};

struct LidarParams {
  int rayCount = 180;
  double maxRange = 20.0;
  double minRange = 0.0;
};

// One simulated 360-degree range scan: walls from the true map, people as
// circles. Marks traversed cells free, the hit cell occupied, and bumps
// obs_count on every visited cell.
void integrateScan(OccupancyGrid& grid, const sim::WorldMap& world, const Vec2& sensorPos,
                   const std::vector<sim::AgentState>& agents, const LidarParams& lidar);

}  // namespace rpf::mapping
