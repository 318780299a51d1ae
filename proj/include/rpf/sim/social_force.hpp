#pragma once

#include <vector>

#include "rpf/sim/scenario.hpp"

namespace rpf::sim {

struct SocialForceParams {
  double pairGain = 2.0;
  double pairRange = 0.8;
  double wallGain = 2.0;
  double wallRange = 0.4;
  double relaxTime = 0.5;
  double anisotropy = 0.3;  // response to agents behind is scaled down to this
  double bodyGain = 5.0;
  double arrivalRadius = 0.3;
};

// Desired velocity of a scripted walker at time t: toward the active waypoint
// at the scripted speed, zero while waiting, finished, or not yet started.
// Advances agent.waypointIndex as waypoints are reached.
Vec2 scriptDesiredVelocity(ScriptedAgent& agent, double t, double arrivalRadius);

Vec2 pairwiseRepulsion(const AgentState& self, const Vec2& selfDir, const AgentState& other,
                       const SocialForceParams& p);

// Advances every agent by dt. The robot integrates its command directly;
// pedestrians follow their scripts under social forces, rigid ones follow the
// script exactly. No agent center ends the step inside an occupied cell.
void stepWorld(const WorldMap& world, AgentState& robot, const RobotCommand& cmd,
               std::vector<ScriptedAgent>& pedestrians, double t, double dt,
               const SocialForceParams& p);

}  // namespace rpf::sim
