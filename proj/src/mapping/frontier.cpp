#include "rpf/mapping/frontier.hpp"

#include <deque>

namespace rpf::mapping {

bool isFrontierCell(const OccupancyGrid& grid, const CellIndex& c) {
  if (!grid.isFree(c)) return false;
  const GridGeometry& geo = grid.geometry();
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      const CellIndex n{c.x + dx, c.y + dy};
      if (geo.inBounds(n) && grid.isUnknown(n)) return true;
    }
  }
  return false;
}

std::vector<Frontier> detectFrontiers(const OccupancyGrid& grid, const FrontierParams& params) {
  const GridGeometry& geo = grid.geometry();
  std::vector<uint8_t> frontier(geo.cellCount(), 0);
  for (int y = 0; y < geo.height; ++y)
    for (int x = 0; x < geo.width; ++x)
      if (isFrontierCell(grid, {x, y})) frontier[geo.index({x, y})] = 1;

  std::vector<Frontier> out;
  std::vector<uint8_t> seen(geo.cellCount(), 0);
  std::deque<CellIndex> queue;
  for (int y = 0; y < geo.height; ++y) {
    for (int x = 0; x < geo.width; ++x) {
      const int idx = geo.index({x, y});
      if (!frontier[idx] || seen[idx]) continue;
      seen[idx] = 1;
      queue.push_back({x, y});
      Vec2 sum = Vec2::Zero();
      int count = 0;
      while (!queue.empty()) {
        const CellIndex c = queue.front();
        queue.pop_front();
        sum += geo.cellCenter(c);
        ++count;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const CellIndex n{c.x + dx, c.y + dy};
            if (!geo.inBounds(n)) continue;
            const int ni = geo.index(n);
            if (frontier[ni] && !seen[ni]) {
              seen[ni] = 1;
              queue.push_back(n);
            }
          }
        }
      }
      if (count >= params.minCells) out.push_back({sum / count, count});
    }
  }
  return out;
}

}  // namespace rpf::mapping
