#pragma once

#include <deque>
#include <map>
#include <vector>

#include "rpf/perception/camera.hpp"
#include "rpf/sim/scenario.hpp"

namespace rpf::perception {

struct Detection {
  int agentId = -1;
  bool isTarget = false;
  Vec2 position = Vec2::Zero();
  Vec2 velocity = Vec2::Zero();
  BBox bbox;
  double range = 0.0;
};

// What the camera reported this frame; kept in a short window so an occlusion
// can be classified from the moments before a loss.
struct FrameObservation {
  double t = 0.0;
  std::optional<BBox> targetBox;
  std::vector<std::pair<int, BBox>> otherBoxes;
};

struct SenseParams {
  double occlusionCoverage = 0.7;   // hidden when a nearer box covers more than this
  double velocitySpacing = 0.3;     // finite-difference spacing, seconds
  double historyKeep = 1.0;
};

// Camera detection with bbox-level person-on-person occlusion. A person is
// detected when in range, inside the field of view, the ray to them clear of
// walls, and no nearer person's box covers theirs beyond the threshold.
// Detection velocities are finite differences over the recent position history.
class Sensor {
 public:
  explicit Sensor(const CameraParams& cam = {}, const SenseParams& p = {})
      : cam_(cam), params_(p) {}

  // walkers holds every person including the target; targetId marks which one.
  std::vector<Detection> sense(const sim::WorldMap& world, const sim::AgentState& robot,
                               const std::vector<sim::ScriptedAgent>& walkers,
                               int targetId, double t);

  const CameraParams& camera() const { return cam_; }

 private:
  CameraParams cam_;
  SenseParams params_;
  std::map<int, std::deque<std::pair<double, Vec2>>> history_;
};

}  // namespace rpf::perception
