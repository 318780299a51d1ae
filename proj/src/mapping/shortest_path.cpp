#include "rpf/mapping/shortest_path.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace rpf::mapping {

namespace {

std::vector<CellIndex> diskOffsets(double radius, double resolution) {
  const int r = static_cast<int>(std::floor(radius / resolution + 1e-9));
  std::vector<CellIndex> out;
  for (int dy = -r; dy <= r; ++dy)
    for (int dx = -r; dx <= r; ++dx)
      if (std::hypot(dx, dy) * resolution <= radius + 1e-9) out.push_back({dx, dy});
  return out;
}

// Offsets sorted by distance; used to snap endpoints deterministically.
std::vector<CellIndex> sortedDiskOffsets(double radius, double resolution) {
  auto out = diskOffsets(radius, resolution);
  std::sort(out.begin(), out.end(), [](const CellIndex& a, const CellIndex& b) {
    const double da = a.x * a.x + a.y * a.y, db = b.x * b.x + b.y * b.y;
    if (da != db) return da < db;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  });
  return out;
}

}  // namespace

std::vector<uint8_t> inflatedOccupancy(const OccupancyGrid& grid, double inflateRadius) {
  const GridGeometry& geo = grid.geometry();
  std::vector<uint8_t> blocked(geo.cellCount(), 0);
  const auto offsets = diskOffsets(inflateRadius, geo.resolution);
  for (int y = 0; y < geo.height; ++y) {
    for (int x = 0; x < geo.width; ++x) {
      if (!grid.isOccupied({x, y})) continue;
      for (const auto& o : offsets) {
        const CellIndex n{x + o.x, y + o.y};
        if (geo.inBounds(n)) blocked[geo.index(n)] = 1;
      }
    }
  }
  return blocked;
}

const std::vector<uint8_t>& InflationCache::get(const OccupancyGrid& grid,
                                                double inflateRadius) {
  if (grid.occupiedRevision() != revision_ || inflateRadius != radius_ ||
      mask_.size() != static_cast<size_t>(grid.geometry().cellCount())) {
    mask_ = inflatedOccupancy(grid, inflateRadius);
    revision_ = grid.occupiedRevision();
    radius_ = inflateRadius;
  }
  return mask_;
}

namespace {

struct QueueEntry {
  double dist;
  int index;
  bool operator>(const QueueEntry& o) const {
    if (dist != o.dist) return dist > o.dist;
    return index > o.index;  // deterministic tie order
  }
};

std::optional<CellIndex> snapCell(const GridGeometry& geo, const std::vector<uint8_t>& blocked,
                                  const std::vector<uint8_t>& traversable, const Vec2& p,
                                  double snapRadius) {
  const CellIndex c = geo.worldToCell(p);
  for (const auto& o : sortedDiskOffsets(snapRadius, geo.resolution)) {
    const CellIndex n{c.x + o.x, c.y + o.y};
    if (geo.inBounds(n) && !blocked[geo.index(n)] && traversable[geo.index(n)])
      return n;
  }
  return std::nullopt;
}

struct SearchGrid {
  std::vector<uint8_t> blocked;
  std::vector<uint8_t> traversable;
};

SearchGrid buildSearchGrid(const OccupancyGrid& grid, const PathQueryOptions& opt) {
  const GridGeometry& geo = grid.geometry();
  SearchGrid sg;
  sg.blocked = inflatedOccupancy(grid, opt.inflateRadius);
  sg.traversable.assign(geo.cellCount(), 0);
  for (int y = 0; y < geo.height; ++y) {
    for (int x = 0; x < geo.width; ++x) {
      const CellIndex c{x, y};
      const bool open = grid.isFree(c) || (opt.unknownTraversable && !grid.isOccupied(c));
      sg.traversable[geo.index(c)] = open ? 1 : 0;
    }
  }
  return sg;
}

}  // namespace

DistanceField computeDistanceField(const OccupancyGrid& grid, const Vec2& from,
                                   const PathQueryOptions& opt) {
  const GridGeometry& geo = grid.geometry();
  const CellIndex rawCell = geo.worldToCell(from);
  if (!geo.inBounds(rawCell)) throw std::invalid_argument("path source outside the map");
  if (grid.isOccupied(rawCell)) throw std::invalid_argument("path source inside an occupied cell");

  const SearchGrid sg = buildSearchGrid(grid, opt);
  std::vector<double> dist(geo.cellCount(), DistanceField::kUnreachable);
  const auto src = snapCell(geo, sg.blocked, sg.traversable, from, opt.snapRadius);
  if (!src) return DistanceField(geo, std::move(dist), rawCell);

  const double res = geo.resolution;
  const double diag = res * std::sqrt(2.0);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>> pq;
  dist[geo.index(*src)] = 0.0;
  pq.push({0.0, geo.index(*src)});

  auto open = [&](const CellIndex& c) {
    return geo.inBounds(c) && !sg.blocked[geo.index(c)] && sg.traversable[geo.index(c)];
  };

  while (!pq.empty()) {
    const QueueEntry top = pq.top();
    pq.pop();
    if (top.dist > dist[top.index]) continue;
    const CellIndex c{top.index % geo.width, top.index / geo.width};
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const CellIndex n{c.x + dx, c.y + dy};
        if (!open(n)) continue;
        if (dx != 0 && dy != 0) {
          // no cutting corners past a blocked orthogonal neighbor
          if (!open({c.x + dx, c.y}) || !open({c.x, c.y + dy})) continue;
        }
        const double nd = top.dist + ((dx != 0 && dy != 0) ? diag : res);
        const int ni = geo.index(n);
        if (nd < dist[ni]) {
          dist[ni] = nd;
          pq.push({nd, ni});
        }
      }
    }
  }
  return DistanceField(geo, std::move(dist), *src);
}

std::optional<double> shortestDistance(const OccupancyGrid& grid, const Vec2& from,
                                       const Vec2& to, const PathQueryOptions& opt) {
  const DistanceField field = computeDistanceField(grid, from, opt);
  const GridGeometry& geo = grid.geometry();
  const SearchGrid sg = buildSearchGrid(grid, opt);
  const auto dst = snapCell(geo, sg.blocked, sg.traversable, to, opt.snapRadius);
  if (!dst) return std::nullopt;
  const double d = field.at(*dst);
  if (d == DistanceField::kUnreachable) return std::nullopt;
  return d;
}

std::optional<std::vector<Vec2>> planPath(const OccupancyGrid& grid, const Vec2& from,
                                          const Vec2& to, const PathQueryOptions& opt) {
  // Field is rooted at the goal so the path is a downhill walk from the start.
  const GridGeometry& geo = grid.geometry();
  const SearchGrid sg = buildSearchGrid(grid, opt);
  const auto goal = snapCell(geo, sg.blocked, sg.traversable, to, opt.snapRadius);
  if (!goal) return std::nullopt;
  const DistanceField field = computeDistanceField(grid, geo.cellCenter(*goal), opt);
  const auto start = snapCell(geo, sg.blocked, sg.traversable, from, opt.snapRadius);
  if (!start) return std::nullopt;
  if (field.at(*start) == DistanceField::kUnreachable) return std::nullopt;

  std::vector<Vec2> path;
  CellIndex c = *start;
  path.push_back(geo.cellCenter(c));
  for (int guard = 0; guard < geo.cellCount(); ++guard) {
    if (field.at(c) <= 1e-12) break;
    CellIndex best = c;
    double bestDist = field.at(c);
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const CellIndex n{c.x + dx, c.y + dy};
        if (dx != 0 && dy != 0) {
          auto openCell = [&](const CellIndex& q) {
            return geo.inBounds(q) && !sg.blocked[geo.index(q)] && sg.traversable[geo.index(q)];
          };
          if (!openCell({c.x + dx, c.y}) || !openCell({c.x, c.y + dy})) continue;
        }
        const double d = field.at(n);
        if (d < bestDist) {
          bestDist = d;
          best = n;
        }
      }
    }
    if (best == c) break;  // local plateau; should not happen on a valid field
    c = best;
    path.push_back(geo.cellCenter(c));
  }
  return path;
}

}  // namespace rpf::mapping
