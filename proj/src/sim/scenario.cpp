#include "rpf/sim/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace rpf::sim {

using nlohmann::json;

const char* roleName(AgentRole role) {
  switch (role) {
    case AgentRole::kRobot: return "robot";
    case AgentRole::kTarget: return "target";
    case AgentRole::kOccluder: return "occluder";
    case AgentRole::kBystander: return "bystander";
  }
  return "?";
}

namespace {

Vec2 parseVec2(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ScenarioError(what + " must be a [x, y] pair");
  return Vec2(j[0].get<double>(), j[1].get<double>());
}

MotionScript parseScript(const json& j, const std::string& what) {
  MotionScript s;
  if (j.contains("speed")) s.speed = j.at("speed").get<double>();
  if (j.contains("speed_range")) {
    const auto& r = j.at("speed_range");
    if (!r.is_array() || r.size() != 2) throw ScenarioError(what + ".speed_range must be [lo, hi]");
    s.speedRange = {r[0].get<double>(), r[1].get<double>()};
    if (s.speedRange->first > s.speedRange->second)
      throw ScenarioError(what + ".speed_range is inverted");
  }
  if (j.contains("speed_from") || j.contains("speed_to")) {
    s.ramp = true;
    s.speedFrom = j.at("speed_from").get<double>();
    s.speedTo = j.at("speed_to").get<double>();
    s.rampDuration = j.value("ramp_duration", 1.0);
    if (s.rampDuration <= 0) throw ScenarioError(what + ".ramp_duration must be positive");
  }
  s.startTime = j.value("start_time", 0.0);
  s.jitter = j.value("jitter", 0.0);
  if (!j.contains("waypoints")) throw ScenarioError(what + " needs waypoints");
  for (const auto& w : j.at("waypoints")) {
    WaypointSpec wp;
    if (w.is_array()) {
      wp.pos = parseVec2(w, what + ".waypoint");
    } else {
      wp.pos = parseVec2(w.at("pos"), what + ".waypoint.pos");
      wp.waitUntil = w.value("wait_until", 0.0);
    }
    s.waypoints.push_back(wp);
  }
  if (s.waypoints.empty()) throw ScenarioError(what + " needs at least one waypoint");
  return s;
}

AgentState parseAgentCommon(const json& j, AgentRole role, int fallbackId,
                            const std::string& what) {
  AgentState a;
  a.role = role;
  a.id = j.value("id", fallbackId);
  a.position = parseVec2(j.at("position"), what + ".position");
  a.heading = j.value("heading", 0.0);
  a.radius = j.value("radius", 0.3);
  a.speedLimit = j.value("speed_limit", role == AgentRole::kRobot ? 2.0 : 1.7);
  if (a.radius <= 0) throw ScenarioError(what + ".radius must be positive");
  return a;
}

void requireFree(const WorldMap& world, const Vec2& p, const std::string& what) {
  if (world.occupiedAt(p))
    throw ScenarioError(what + " at (" + std::to_string(p.x()) + ", " + std::to_string(p.y()) +
                        ") lies in an occupied cell");
}

}  // namespace

Scenario parseScenario(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ScenarioError(name + ": invalid JSON: " + e.what());
  }

  Scenario sc;
  sc.name = j.value("name", name);
  try {
    const auto& m = j.at("map");
    const double res = m.at("resolution").get<double>();
    if (res <= 0) throw ScenarioError(sc.name + ": map.resolution must be positive");
    std::vector<std::string> rows = m.at("rows").get<std::vector<std::string>>();
    try {
      sc.world = WorldMap(res, rows);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(sc.name + ": bad map: " + e.what());
    }

    sc.seed = j.value("seed", 0ull);
    sc.timeLimit = j.value("time_limit", 180.0);
    sc.timestep = j.value("timestep", 0.1);
    if (sc.timeLimit <= 0 || sc.timestep <= 0)
      throw ScenarioError(sc.name + ": time_limit and timestep must be positive");

    bool haveRobot = false, haveTarget = false;
    int nextId = 0;
    for (const auto& a : j.at("agents")) {
      const std::string role = a.at("role").get<std::string>();
      if (role == "robot") {
        sc.robot = parseAgentCommon(a, AgentRole::kRobot, nextId++, sc.name + ".robot");
        haveRobot = true;
      } else if (role == "target") {
        sc.target = parseAgentCommon(a, AgentRole::kTarget, nextId++, sc.name + ".target");
        haveTarget = true;
      } else if (role == "bystander") {
        PedestrianSpec p;
        p.agent = parseAgentCommon(a, AgentRole::kBystander, nextId++, sc.name + ".bystander");
        p.script = parseScript(a.at("script"), sc.name + ".bystander.script");
        sc.bystanders.push_back(p);
      } else {
        throw ScenarioError(sc.name + ": unknown agent role '" + role + "'");
      }
    }
    if (!haveRobot) throw ScenarioError(sc.name + ": no robot agent");
    if (!haveTarget) throw ScenarioError(sc.name + ": no target agent");

    sc.targetScript = parseScript(j.at("target_script"), sc.name + ".target_script");

    if (j.contains("occluders")) {
      for (const auto& o : j.at("occluders")) {
        PedestrianSpec p;
        p.agent = parseAgentCommon(o, AgentRole::kOccluder, 100 + nextId++, sc.name + ".occluder");
        p.script = parseScript(o, sc.name + ".occluder");
        p.rigid = o.value("rigid", false);
        if (o.contains("group")) {
          GroupSpec g;
          const auto& gj = o.at("group");
          g.count = gj.at("count").get<int>();
          g.spacing = gj.value("spacing", 1.2);
          if (gj.contains("axis")) g.axis = parseVec2(gj.at("axis"), sc.name + ".group.axis");
          if (g.count < 1) throw ScenarioError(sc.name + ": group.count must be >= 1");
          if (g.axis.norm() < 1e-9) throw ScenarioError(sc.name + ": group.axis is zero");
          g.axis.normalize();
          p.group = g;
        }
        sc.occluders.push_back(p);
      }
    }
  } catch (const json::exception& e) {
    throw ScenarioError(sc.name + ": " + e.what());
  }

  requireFree(sc.world, sc.robot.position, sc.name + ": robot start");
  requireFree(sc.world, sc.target.position, sc.name + ": target start");
  for (const auto& w : sc.targetScript.waypoints)
    requireFree(sc.world, w.pos, sc.name + ": target waypoint");
  for (const auto& o : sc.occluders) {
    requireFree(sc.world, o.agent.position, sc.name + ": occluder start");
    for (const auto& w : o.script.waypoints)
      requireFree(sc.world, w.pos, sc.name + ": occluder waypoint");
  }
  for (const auto& b : sc.bystanders) {
    requireFree(sc.world, b.agent.position, sc.name + ": bystander start");
    for (const auto& w : b.script.waypoints)
      requireFree(sc.world, w.pos, sc.name + ": bystander waypoint");
  }
  return sc;
}

Scenario loadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string base = path;
  const auto slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  if (dot != std::string::npos) base = base.substr(0, dot);
  return parseScenario(ss.str(), base);
}

namespace {

MotionScript resolveScript(const MotionScript& in, const WorldMap& world, Rng& rng) {
  MotionScript out = in;
  if (in.speedRange) out.speed = rng.uniform(in.speedRange->first, in.speedRange->second);
  if (in.jitter > 0) {
    for (auto& w : out.waypoints) {
      for (int attempt = 0; attempt < 20; ++attempt) {
        const Vec2 cand = w.pos + Vec2(rng.uniform(-in.jitter, in.jitter),
                                       rng.uniform(-in.jitter, in.jitter));
        if (!world.occupiedAt(cand)) {
          w.pos = cand;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

ScenarioInstance instantiate(const Scenario& scenario, uint64_t seed) {
  ScenarioInstance inst;
  inst.name = scenario.name;
  inst.seed = seed;
  inst.timeLimit = scenario.timeLimit;
  inst.timestep = scenario.timestep;
  inst.robot = scenario.robot;

  Rng rng(seed * 0x2545f4914f6cdd1dull + 0x1234567);
  inst.target.state = scenario.target;
  inst.target.script = resolveScript(scenario.targetScript, scenario.world, rng);

  int syntheticId = 1000;
  for (const auto& spec : scenario.occluders) {
    const MotionScript resolved = resolveScript(spec.script, scenario.world, rng);
    const int copies = spec.group ? spec.group->count : 1;
    for (int k = 0; k < copies; ++k) {
      ScriptedAgent a;
      a.state = spec.agent;
      a.script = resolved;
      a.rigid = spec.rigid;
      if (spec.group) {
        const double off = (k - (copies - 1) * 0.5) * spec.group->spacing;
        const Vec2 shift = spec.group->axis * off;
        a.state.position += shift;
        for (auto& w : a.script.waypoints) w.pos += shift;
        if (k > 0) a.state.id = syntheticId++;
      }
      inst.pedestrians.push_back(a);
    }
  }
  for (const auto& spec : scenario.bystanders) {
    ScriptedAgent a;
    a.state = spec.agent;
    a.script = resolveScript(spec.script, scenario.world, rng);
    inst.pedestrians.push_back(a);
  }
  return inst;
}

}  // namespace rpf::sim
