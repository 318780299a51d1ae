#pragma once

#include <vector>

#include "rpf/geometry.hpp"

namespace rpf::dynamic {

struct KorobovParams {
  int n = 64;
  int a = 19;  // coprime with n
  double depth = 6.0;  // rectangle extent ahead of the robot
  double width = 4.0;  // rectangle extent across
};

// Unit-square lattice {(i/N, (i*a mod N)/N)}.
std::vector<Vec2> korobovUnitPoints(int n, int a);

// Lattice mapped into a depth x width rectangle ahead of a pose: first
// coordinate becomes forward distance, second becomes lateral offset.
std::vector<Vec2> korobovCandidates(const Vec2& pos, double heading, const KorobovParams& p);

}  // namespace rpf::dynamic
