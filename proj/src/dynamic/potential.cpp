#include "rpf/dynamic/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rpf::dynamic {

std::vector<std::vector<Vec2>> predictOccluders(const std::vector<OccluderTrack>& occluders,
                                                const mapping::OccupancyGrid& grid,
                                                const PotentialParams& p) {
  if (occluders.empty()) throw std::invalid_argument("empty occluder set");
  const GridGeometry& geo = grid.geometry();
  const int steps = static_cast<int>(std::round(p.predHorizon / p.predStep));
  std::vector<std::vector<Vec2>> paths;
  paths.reserve(occluders.size());
  for (const auto& occ : occluders) {
    std::vector<Vec2> pts;
    pts.reserve(steps);
    for (int k = 0; k < steps; ++k) {
      const Vec2 q = occ.position + occ.velocity * (k * p.predStep);
      const CellIndex c = geo.worldToCell(q);
      if (k > 0 && geo.inBounds(c) && grid.isOccupied(c)) break;  // clipped at the wall
      pts.push_back(q);
    }
    paths.push_back(std::move(pts));
  }
  return paths;
}

namespace {

// Nearest hazard point within d0: forecast points plus inflated occupied cell
// centers near x. Returns distance d0 + 1 when nothing is in range.
std::pair<double, Vec2> nearestHazard(const Vec2& x,
                                      const std::vector<std::vector<Vec2>>& occluderPaths,
                                      const mapping::OccupancyGrid& grid,
                                      const std::vector<uint8_t>& inflatedMask, double d0) {
  double best = d0 + 1.0;
  Vec2 bestPt = x + Vec2(best, 0);
  for (const auto& path : occluderPaths) {
    for (const auto& q : path) {
      const double d = (x - q).norm();
      if (d < best) {
        best = d;
        bestPt = q;
      }
    }
  }
  const GridGeometry& geo = grid.geometry();
  const CellIndex c = geo.worldToCell(x);
  const int r = static_cast<int>(std::ceil(d0 / geo.resolution)) + 1;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      const CellIndex n{c.x + dx, c.y + dy};
      if (!geo.inBounds(n)) continue;
      if (!inflatedMask[geo.index(n)]) continue;
      const Vec2 q = geo.cellCenter(n);
      const double d = (x - q).norm();
      if (d < best) {
        best = d;
        bestPt = q;
      }
    }
  }
  return {best, bestPt};
}

}  // namespace

Vec2 repulsiveForce(const Vec2& x, const std::vector<std::vector<Vec2>>& occluderPaths,
                    const mapping::OccupancyGrid& grid,
                    const std::vector<uint8_t>& inflatedMask, const PotentialParams& p,
                    const Vec2& prevStepDir) {
  const auto [d, hazard] = nearestHazard(x, occluderPaths, grid, inflatedMask, p.d0);
  if (d > p.d0) return Vec2::Zero();
  if (d < 1e-9) {
    Vec2 dir = -prevStepDir;
    if (dir.norm() < 1e-9) dir = Vec2(1, 0);
    return dir.normalized() * p.repulsionCap();
  }
  const Vec2 w = x - hazard;
  double mag = p.etaF * (1.0 / d - 1.0 / p.d0) / (d * d);
  mag = std::min(mag, p.repulsionCap());
  return w / d * mag;
}

double observationGain(const perception::CameraParams& cam, const Vec2& x,
                       const Vec2& anticipatedTarget, const Vec2& occluderPos) {
  const Vec2 look = anticipatedTarget - x;
  if (look.norm() < 1e-9) return 1.0;
  const double heading = std::atan2(look.y(), look.x());
  const auto tarBox = perception::projectPerson(cam, x, heading, anticipatedTarget);
  const auto occBox = perception::projectPerson(cam, x, heading, occluderPos);
  if (!tarBox || !occBox) return 1.0;
  return 1.0 - tarBox->iou(*occBox);
}

OvertakeEval evaluateOvertake(const Vec2& robotPos, double robotHeading,
                              const std::vector<OccluderTrack>& occluders,
                              const mapping::OccupancyGrid& grid,
                              const std::vector<uint8_t>& inflatedMask,
                              const perception::CameraParams& cam, double dFront,
                              const PotentialParams& p,
                              const std::optional<Vec2>& stickyGoal) {
  if (occluders.empty()) throw std::invalid_argument("empty occluder set");

  const OccluderTrack* nearest = &occluders.front();
  for (const auto& o : occluders)
    if ((o.position - robotPos).norm() < (nearest->position - robotPos).norm()) nearest = &o;

  OvertakeEval eval;
  Vec2 ahead = nearest->velocity;
  if (ahead.norm() < 0.05) ahead = nearest->position - robotPos;  // stationary: assume along the line of sight
  if (ahead.norm() < 1e-9) ahead = Vec2(1, 0);
  eval.anticipatedTarget = nearest->position + ahead.normalized() * dFront;

  const auto paths = predictOccluders(occluders, grid, p);
  const GridGeometry& geo = grid.geometry();

  const auto lattice = korobovCandidates(robotPos, robotHeading, p.lattice);
  double bestCost = std::numeric_limits<double>::infinity();
  int bestIdx = -1;
  for (const auto& x : lattice) {
    const CellIndex c = geo.worldToCell(x);
    if (!geo.inBounds(c) || grid.isOccupied(c) || inflatedMask[geo.index(c)]) continue;
    const double g = observationGain(cam, x, eval.anticipatedTarget, nearest->position);
    const double att = p.etaA * (robotPos - x).norm() / (g + 1.0);
    const double rep = repulsiveForce(x, paths, grid, inflatedMask, p).norm();
    const double cost = att + rep;
    eval.candidates.push_back(x);
    eval.costs.push_back(cost);
    if (cost < bestCost) {
      bestCost = cost;
      bestIdx = static_cast<int>(eval.candidates.size()) - 1;
    }
  }
  if (bestIdx < 0) throw std::runtime_error("no feasible overtake candidate");

  eval.goal = eval.candidates[bestIdx];
  eval.cost = bestCost;
  if (stickyGoal) {
    // Hold the previous goal while it stays within the hysteresis margin.
    int nearIdx = -1;
    double nearD = 0.75;
    for (size_t i = 0; i < eval.candidates.size(); ++i) {
      const double d = (eval.candidates[i] - *stickyGoal).norm();
      if (d < nearD) {
        nearD = d;
        nearIdx = static_cast<int>(i);
      }
    }
    if (nearIdx >= 0 && eval.costs[nearIdx] <= bestCost * (1.0 + p.stickiness)) {
      eval.goal = eval.candidates[nearIdx];
      eval.cost = eval.costs[nearIdx];
    }
  }
  return eval;
}

Vec2 planOvertakeStep(const Vec2& robotPos, const Vec2& goal, double gainG,
                      const std::vector<std::vector<Vec2>>& occluderPaths,
                      const mapping::OccupancyGrid& grid,
                      const std::vector<uint8_t>& inflatedMask, const PotentialParams& p,
                      double speedLimit, const Vec2& prevStepDir) {
  const Vec2 attract = p.etaA * (goal - robotPos) / (gainG + 1.0);
  const Vec2 repel = repulsiveForce(robotPos, occluderPaths, grid, inflatedMask, p, prevStepDir);
  Vec2 cmd = attract + repel;
  const double mag = cmd.norm();
  if (mag > speedLimit) cmd *= speedLimit / mag;
  return cmd;
}

}  // namespace rpf::dynamic
