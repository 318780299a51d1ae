#include "rpf/dynamic/fluid.hpp"

#include <cmath>
#include <stdexcept>

namespace rpf::dynamic {

Vec2 fluidVelocity(const std::vector<OccluderTrack>& occluders, const Vec2& x,
                   double gammaVisc) {
  if (occluders.empty()) throw std::invalid_argument("empty occluder set");
  Vec2 num = Vec2::Zero();
  double den = 0.0;
  for (const auto& o : occluders) {
    const double a = std::exp(-gammaVisc * (x - o.position).squaredNorm());
    num += a * o.velocity;
    den += a;
  }
  if (den < 1e-300) {
    // All kernels underflowed; fall back to the plain average.
    for (const auto& o : occluders) num += o.velocity;
    return num / static_cast<double>(occluders.size());
  }
  return num / den;
}

double fluidDensity(const std::vector<OccluderTrack>& occluders,
                    const mapping::OccupancyGrid& grid, const Vec2& x, double sigmaRho) {
  const GridGeometry& geo = grid.geometry();
  const CellIndex c = geo.worldToCell(x);
  const uint32_t count = geo.inBounds(c) ? grid.observationCount(c) : 0;
  const double nObs = std::max<uint32_t>(count, 1);
  double sum = 0.0;
  for (const auto& o : occluders)
    sum += std::exp(-(x - o.position).squaredNorm() / (2.0 * sigmaRho * sigmaRho));
  return sum / (2.0 * M_PI * sigmaRho * sigmaRho * nObs);
}

FluidGoal fluidFollowGoal(const Vec2& robotPos, double robotHeading, const Vec2& robotVel,
                          const std::vector<OccluderTrack>& occluders,
                          const mapping::OccupancyGrid& grid,
                          const std::vector<uint8_t>& inflatedMask, const FluidParams& p) {
  if (occluders.empty()) throw std::invalid_argument("empty occluder set");
  const GridGeometry& geo = grid.geometry();

  Vec2 meanVel = Vec2::Zero();
  for (const auto& o : occluders) meanVel += o.velocity;
  meanVel /= static_cast<double>(occluders.size());
  Vec2 forward = meanVel;
  if (forward.norm() < 1e-6) forward = Vec2(std::cos(robotHeading), std::sin(robotHeading));
  forward.normalize();

  double bestObj = std::numeric_limits<double>::infinity();
  std::vector<std::pair<Vec2, double>> feasible;
  for (const auto& x : korobovCandidates(robotPos, robotHeading, p.lattice)) {
    const CellIndex c = geo.worldToCell(x);
    if (!geo.inBounds(c) || grid.isOccupied(c) || inflatedMask[geo.index(c)]) continue;
    const double rho = fluidDensity(occluders, grid, x, p.sigmaRho);
    const double obj = p.gammaObj * rho * (robotVel - fluidVelocity(occluders, x, p.gammaVisc)).norm();
    feasible.emplace_back(x, obj);
    bestObj = std::min(bestObj, obj);
  }
  if (feasible.empty()) throw std::runtime_error("no feasible flow candidate");

  FluidGoal out;
  double bestProgress = -std::numeric_limits<double>::infinity();
  for (const auto& [x, obj] : feasible) {
    if (obj > bestObj + p.tieEpsilon) continue;
    const double progress = (x - robotPos).dot(forward);
    if (progress > bestProgress) {
      bestProgress = progress;
      out.goal = x;
      out.objective = obj;
    }
  }
  return out;
}

}  // namespace rpf::dynamic
