#pragma once

#include <vector>

#include "rpf/mapping/occupancy_grid.hpp"

namespace rpf::mapping {

struct Frontier {
  Vec2 centroid = Vec2::Zero();
  int cellCount = 0;
};

struct FrontierParams {
  int minCells = 3;
};

// Frontier cells are known-free cells with at least one unknown 8-neighbor.
// Cells are grouped into 8-connected contours; contours below minCells are
// dropped and the rest are reported by centroid.
std::vector<Frontier> detectFrontiers(const OccupancyGrid& grid,
                                      const FrontierParams& params = {});

bool isFrontierCell(const OccupancyGrid& grid, const CellIndex& c);

}  // namespace rpf::mapping
