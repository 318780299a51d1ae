#pragma once

#include <optional>
#include <string>

#include "rpf/geometry.hpp"

namespace rpf::sim {

enum class AgentRole { kRobot, kTarget, kOccluder, kBystander };

struct AgentState {
  int id = 0;
  AgentRole role = AgentRole::kBystander;
  Vec2 position = Vec2::Zero();
  Vec2 velocity = Vec2::Zero();
  double heading = 0.0;
  double radius = 0.3;
  double speedLimit = 1.7;
};

// Holonomic base: velocity is tracked directly. Heading follows the velocity
// direction unless a spin rate is commanded (used by the rotate-in-place scan).
struct RobotCommand {
  Vec2 velocity = Vec2::Zero();
  std::optional<double> headingRate;
};

const char* roleName(AgentRole role);

}  // namespace rpf::sim
