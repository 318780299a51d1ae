#include "rpf/sim/social_force.hpp"

#include <algorithm>
#include <cmath>

namespace rpf::sim {

namespace {

// Pushes p out of any occupied cell rectangle closer than radius. Returns the
// resolved position; contact normals are accumulated so the caller can kill
// the velocity component into the wall.
Vec2 resolveWallContact(const WorldMap& world, const Vec2& prev, Vec2 p, double radius,
                        Vec2* velocity) {
  for (int iter = 0; iter < 4; ++iter) {
    const auto q = world.nearestOccupiedPoint(p, radius);
    if (!q) break;
    Vec2 n = p - *q;
    double d = n.norm();
    if (d < 1e-9) {
      // Centered on the obstacle surface; back out toward the previous position.
      n = prev - p;
      d = n.norm();
      if (d < 1e-9) n = Vec2(1, 0), d = 1;
    }
    n /= d;
    p = *q + n * (radius + 1e-7);
    if (velocity) {
      const double into = velocity->dot(-n);
      if (into > 0) *velocity += n * into;
    }
  }
  if (world.occupiedAt(p)) {
    p = prev;  // previous position is known good
    if (velocity) *velocity = Vec2::Zero();
  }
  return p;
}

// Wall resolution can nudge the point sideways; the contract is that one step
// never moves an agent farther than speedLimit * dt.
Vec2 capDisplacement(const WorldMap& world, const Vec2& prev, Vec2 p, double maxDisp) {
  const Vec2 d = p - prev;
  const double len = d.norm();
  if (len > maxDisp) {
    const Vec2 capped = prev + d * (maxDisp / len);
    p = world.occupiedAt(capped) ? prev : capped;
  }
  return p;
}

}  // namespace

Vec2 scriptDesiredVelocity(ScriptedAgent& agent, double t, double arrivalRadius) {
  const MotionScript& s = agent.script;
  if (t < s.startTime) return Vec2::Zero();
  while (agent.waypointIndex < static_cast<int>(s.waypoints.size()) &&
         (agent.state.position - s.waypoints[agent.waypointIndex].pos).norm() <= arrivalRadius) {
    ++agent.waypointIndex;
  }
  if (agent.waypointIndex >= static_cast<int>(s.waypoints.size())) return Vec2::Zero();
  const WaypointSpec& wp = s.waypoints[agent.waypointIndex];
  if (t < wp.waitUntil) return Vec2::Zero();
  const Vec2 delta = wp.pos - agent.state.position;
  const double d = delta.norm();
  if (d < 1e-9) return Vec2::Zero();
  return delta / d * s.speedAt(t);
}

Vec2 pairwiseRepulsion(const AgentState& self, const Vec2& selfDir, const AgentState& other,
                       const SocialForceParams& p) {
  Vec2 w = self.position - other.position;
  const double d = w.norm();
  if (d < 1e-9) return Vec2(p.pairGain, 0);
  w /= d;
  double f = p.pairGain * std::exp((self.radius + other.radius - d) / p.pairRange);
  // Helbing-style anisotropy: pedestrians react less to agents behind them.
  if (selfDir.norm() > 1e-6) {
    const double cosPhi = selfDir.normalized().dot(-w);
    f *= p.anisotropy + (1.0 - p.anisotropy) * 0.5 * (1.0 + cosPhi);
  }
  Vec2 force = w * f;
  const double overlap = self.radius + other.radius - d;
  if (overlap > 0) force += w * (p.bodyGain * overlap);
  return force;
}

namespace {

void advanceRigid(const WorldMap& world, ScriptedAgent& agent, double t, double dt,
                  double arrivalRadius) {
  const Vec2 start = agent.state.position;
  const MotionScript& s = agent.script;
  double remaining = (t >= s.startTime) ? s.speedAt(t) * dt : 0.0;
  Vec2 pos = start;
  while (remaining > 1e-9 && agent.waypointIndex < static_cast<int>(s.waypoints.size())) {
    const WaypointSpec& wp = s.waypoints[agent.waypointIndex];
    if (t < wp.waitUntil) break;
    const Vec2 delta = wp.pos - pos;
    const double d = delta.norm();
    if (d <= std::max(arrivalRadius * 0.1, 1e-6)) {
      ++agent.waypointIndex;
      continue;
    }
    const double step = std::min(remaining, d);
    pos += delta / d * step;
    remaining -= step;
    if (step >= d - 1e-9) ++agent.waypointIndex;
  }
  pos = resolveWallContact(world, start, pos, agent.state.radius, nullptr);
  pos = capDisplacement(world, start, pos, agent.state.speedLimit * dt);
  agent.state.velocity = (pos - start) / dt;
  agent.state.position = pos;
  if (agent.state.velocity.norm() > 0.05)
    agent.state.heading = std::atan2(agent.state.velocity.y(), agent.state.velocity.x());
}

}  // namespace

void stepWorld(const WorldMap& world, AgentState& robot, const RobotCommand& cmd,
               std::vector<ScriptedAgent>& pedestrians, double t, double dt,
               const SocialForceParams& p) {
  // All forces read the pre-step snapshot so agent order cannot matter.
  std::vector<AgentState> snapshot;
  snapshot.reserve(pedestrians.size() + 1);
  snapshot.push_back(robot);
  for (const auto& a : pedestrians) snapshot.push_back(a.state);

  std::vector<Vec2> newVel(pedestrians.size());
  std::vector<bool> rigid(pedestrians.size());
  for (size_t i = 0; i < pedestrians.size(); ++i) {
    ScriptedAgent& a = pedestrians[i];
    rigid[i] = a.rigid;
    if (a.rigid) continue;
    const Vec2 vDes = scriptDesiredVelocity(a, t, p.arrivalRadius);
    Vec2 accel = (vDes - a.state.velocity) / p.relaxTime;
    const Vec2 dir = a.state.velocity.norm() > 0.05 ? a.state.velocity : vDes;
    for (const auto& other : snapshot) {
      if (other.id == a.state.id) continue;
      accel += pairwiseRepulsion(a.state, dir, other, p);
    }
    const auto wallPt = world.nearestOccupiedPoint(a.state.position, a.state.radius + p.wallRange * 3);
    if (wallPt) {
      Vec2 n = a.state.position - *wallPt;
      const double d = n.norm();
      if (d > 1e-9)
        accel += n / d * (p.wallGain * std::exp((a.state.radius - d) / p.wallRange));
    }
    Vec2 v = a.state.velocity + accel * dt;
    const double sp = v.norm();
    if (sp > a.state.speedLimit) v *= a.state.speedLimit / sp;
    newVel[i] = v;
  }

  for (size_t i = 0; i < pedestrians.size(); ++i) {
    if (rigid[i]) {
      advanceRigid(world, pedestrians[i], t, dt, p.arrivalRadius);
      continue;
    }
    ScriptedAgent& a = pedestrians[i];
    const Vec2 prev = a.state.position;
    Vec2 v = newVel[i];
    Vec2 pos = prev + v * dt;
    pos = resolveWallContact(world, prev, pos, a.state.radius, &v);
    pos = capDisplacement(world, prev, pos, a.state.speedLimit * dt);
    a.state.position = pos;
    a.state.velocity = v;
    if (v.norm() > 0.05) a.state.heading = std::atan2(v.y(), v.x());
  }

  Vec2 v = cmd.velocity;
  const double sp = v.norm();
  if (sp > robot.speedLimit) v *= robot.speedLimit / sp;
  const Vec2 prev = robot.position;
  Vec2 pos = prev + v * dt;
  pos = resolveWallContact(world, prev, pos, robot.radius, &v);
  pos = capDisplacement(world, prev, pos, robot.speedLimit * dt);
  robot.position = pos;
  robot.velocity = v;
  if (cmd.headingRate) {
    robot.heading = wrapAngle(robot.heading + *cmd.headingRate * dt);
  } else if (v.norm() > 0.05) {
    robot.heading = std::atan2(v.y(), v.x());
  }
}

}  // namespace rpf::sim
