#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rpf/sim/agent.hpp"
#include "rpf/sim/world.hpp"

namespace rpf::sim {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WaypointSpec {
  Vec2 pos = Vec2::Zero();
  double waitUntil = 0.0;
};

// Waypoint-following script. Supports a fixed speed, a per-seed sampled speed
// range, or a linear speed ramp starting at startTime.
struct MotionScript {
  double speed = 1.2;
  std::optional<std::pair<double, double>> speedRange;
  bool ramp = false;
  double speedFrom = 0.0;
  double speedTo = 0.0;
  double rampDuration = 1.0;
  double startTime = 0.0;
  double jitter = 0.0;  // uniform per-axis waypoint perturbation, meters
  std::vector<WaypointSpec> waypoints;

  double speedAt(double t) const {
    if (!ramp) return speed;
    const double u = std::clamp((t - startTime) / rampDuration, 0.0, 1.0);
    return speedFrom + (speedTo - speedFrom) * u;
  }
};

struct GroupSpec {
  int count = 1;
  double spacing = 1.2;
  Vec2 axis = Vec2(0.0, 1.0);
};

struct PedestrianSpec {
  AgentState agent;
  MotionScript script;
  bool rigid = false;  // rigid agents ignore social forces and hold scripted speed
  std::optional<GroupSpec> group;
};

struct Scenario {
  std::string name;
  WorldMap world;
  uint64_t seed = 0;
  double timeLimit = 180.0;
  double timestep = 0.1;
  AgentState robot;
  AgentState target;
  MotionScript targetScript;
  std::vector<PedestrianSpec> occluders;
  std::vector<PedestrianSpec> bystanders;
};

// A scenario with per-seed sampling resolved: concrete speeds, jittered
// waypoints, groups expanded into individual agents.
struct ScriptedAgent {
  AgentState state;
  MotionScript script;
  bool rigid = false;
  int waypointIndex = 0;
};

struct ScenarioInstance {
  std::string name;
  uint64_t seed = 0;
  double timeLimit = 180.0;
  double timestep = 0.1;
  AgentState robot;
  ScriptedAgent target;
  std::vector<ScriptedAgent> pedestrians;
};

Scenario loadScenario(const std::string& path);
Scenario parseScenario(const std::string& text, const std::string& name);

// RNG draw order (stable across builds): target speed if ranged, target
// waypoint jitter in file order (x then y), then each occluder and bystander
// in file order likewise. Jittered waypoints are resampled up to 20 times to
// land in free space, then fall back to the unjittered position.
ScenarioInstance instantiate(const Scenario& scenario, uint64_t seed);

}  // namespace rpf::sim
