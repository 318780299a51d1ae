#pragma once

#include <vector>

#include "rpf/dynamic/potential.hpp"

namespace rpf::dynamic {

struct FluidParams {
  double gammaVisc = 0.5;  // velocity-blend kernel sharpness
  double sigmaRho = 1.0;   // density kernel width
  double gammaObj = 1.0;
  double tieEpsilon = 1e-6;
  double inflateRadius = 0.4;
  KorobovParams lattice;
};

// Kernel-weighted average of occluder velocities at x; a convex combination,
// so its magnitude never exceeds the fastest occluder.
// Throws std::invalid_argument on an empty occluder set.
Vec2 fluidVelocity(const std::vector<OccluderTrack>& occluders, const Vec2& x,
                   double gammaVisc);

// Crowd density discounted by how often the cell has been observed.
double fluidDensity(const std::vector<OccluderTrack>& occluders,
                    const mapping::OccupancyGrid& grid, const Vec2& x, double sigmaRho);

struct FluidGoal {
  Vec2 goal = Vec2::Zero();
  double objective = 0.0;
};

// Cheapest spot ahead to merge with the crowd flow: minimizes
// density * |robotVel - flowVel|. Near-ties break toward the candidate with
// the most forward progress along the occluders' mean velocity.
FluidGoal fluidFollowGoal(const Vec2& robotPos, double robotHeading, const Vec2& robotVel,
                          const std::vector<OccluderTrack>& occluders,
                          const mapping::OccupancyGrid& grid,
                          const std::vector<uint8_t>& inflatedMask, const FluidParams& p);

}  // namespace rpf::dynamic
