#pragma once

#include <optional>
#include <vector>

#include "rpf/dynamic/korobov.hpp"
#include "rpf/mapping/shortest_path.hpp"
#include "rpf/perception/camera.hpp"

namespace rpf::dynamic {

struct OccluderTrack {
  int agentId = -1;
  Vec2 position = Vec2::Zero();
  Vec2 velocity = Vec2::Zero();
};

struct PotentialParams {
  double etaF = 1.1;       // repulsion gain
  double d0 = 1.3;         // repulsion cutoff
  double etaA = 0.9;       // attraction gain
  double predHorizon = 3.0;
  double predStep = 0.2;
  double inflateRadius = 0.4;
  double dFrontDefault = 1.5;
  double stickiness = 0.10;  // keep the previous goal within this cost margin
  KorobovParams lattice;

  double repulsionCap() const { return 10.0 * etaF; }
};

// Straight-line forecast of each occluder, first point at its current
// position, clipped when it would enter a known-occupied cell.
// Throws std::invalid_argument on an empty occluder set.
std::vector<std::vector<Vec2>> predictOccluders(const std::vector<OccluderTrack>& occluders,
                                                const mapping::OccupancyGrid& grid,
                                                const PotentialParams& p);

// Inverse-distance repulsion from the nearest hazard point (occluder forecast
// points and inflated occupied cells within d0). Zero beyond d0; capped at
// 10*etaF on top of a hazard, pointing away from prevStepDir.
Vec2 repulsiveForce(const Vec2& x, const std::vector<std::vector<Vec2>>& occluderPaths,
                    const mapping::OccupancyGrid& grid,
                    const std::vector<uint8_t>& inflatedMask, const PotentialParams& p,
                    const Vec2& prevStepDir = Vec2(1, 0));

// 1 - IoU of the projected anticipated-target and occluder boxes from a
// virtual camera at x; 1 when either projection is empty.
double observationGain(const perception::CameraParams& cam, const Vec2& x,
                       const Vec2& anticipatedTarget, const Vec2& occluderPos);

struct OvertakeEval {
  Vec2 goal = Vec2::Zero();
  double cost = 0.0;
  Vec2 anticipatedTarget = Vec2::Zero();
  std::vector<Vec2> candidates;
  std::vector<double> costs;
};

// Scores the lattice ahead of the robot by filter cost |F_att| + |F_rep| and
// returns the cheapest candidate. Candidates inside occupied or inflated
// cells are discarded; throws std::runtime_error when none are feasible.
OvertakeEval evaluateOvertake(const Vec2& robotPos, double robotHeading,
                              const std::vector<OccluderTrack>& occluders,
                              const mapping::OccupancyGrid& grid,
                              const std::vector<uint8_t>& inflatedMask,
                              const perception::CameraParams& cam, double dFront,
                              const PotentialParams& p,
                              const std::optional<Vec2>& stickyGoal = std::nullopt);

// Velocity command toward goal under the plan-branch field: attraction to the
// goal divided by (G+1), deflected by the same repulsion, magnitude capped at
// speedLimit without inflating weak near-equilibrium commands.
Vec2 planOvertakeStep(const Vec2& robotPos, const Vec2& goal, double gainG,
                      const std::vector<std::vector<Vec2>>& occluderPaths,
                      const mapping::OccupancyGrid& grid,
                      const std::vector<uint8_t>& inflatedMask, const PotentialParams& p,
                      double speedLimit, const Vec2& prevStepDir);

}  // namespace rpf::dynamic
