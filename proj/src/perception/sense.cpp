#include "rpf/perception/sense.hpp"

#include <algorithm>

namespace rpf::perception {

std::vector<Detection> Sensor::sense(const sim::WorldMap& world, const sim::AgentState& robot,
                                     const std::vector<sim::ScriptedAgent>& walkers,
                                     int targetId, double t) {
  struct RawHit {
    const sim::AgentState* agent;
    bool isTarget;
    BBox box;
    double range;
  };
  std::vector<RawHit> raw;
  auto tryAgent = [&](const sim::AgentState& a, bool isTarget) {
    const auto box = projectPerson(cam_, robot.position, robot.heading, a.position);
    if (!box) return;
    if (!world.segmentClear(robot.position, a.position)) return;
    raw.push_back({&a, isTarget, *box, (a.position - robot.position).norm()});
  };
  for (const auto& p : walkers) tryAgent(p.state, p.state.id == targetId);

  std::sort(raw.begin(), raw.end(), [](const RawHit& a, const RawHit& b) {
    if (a.range != b.range) return a.range < b.range;
    return a.agent->id < b.agent->id;
  });

  std::vector<Detection> out;
  std::vector<const RawHit*> kept;
  for (const auto& hit : raw) {
    bool hidden = false;
    for (const auto* nearer : kept) {
      if (hit.box.coverageBy(nearer->box) > params_.occlusionCoverage) {
        hidden = true;
        break;
      }
    }
    if (hidden) continue;
    kept.push_back(&hit);

    Detection d;
    d.agentId = hit.agent->id;
    d.isTarget = hit.isTarget;
    d.position = hit.agent->position;
    d.bbox = hit.box;
    d.range = hit.range;

    auto& hist = history_[d.agentId];
    const double wantT = t - params_.velocitySpacing;
    const std::pair<double, Vec2>* past = nullptr;
    for (const auto& h : hist) {
      if (h.first <= wantT + 1e-9) past = &h;
      else break;
    }
    if (past && t - past->first > 1e-9)
      d.velocity = (d.position - past->second) / (t - past->first);
    out.push_back(d);

    hist.emplace_back(t, d.position);
    while (!hist.empty() && hist.front().first < t - params_.historyKeep) hist.pop_front();
  }
  return out;
}

}  // namespace rpf::perception
