#pragma once

#include <optional>
#include <vector>

#include "rpf/mapping/shortest_path.hpp"

namespace rpf::control {

struct NavigatorParams {
  double inflateRadius = 0.4;  // robot radius plus margin
  double lookahead = 0.6;
  double arriveRadius = 0.3;
  double replanPeriod = 1.0;
};

// Line of sight on the known grid; unknown cells count as clear. Occupied
// cells within clearNearB of b are ignored: when b is a person's position the
// lidar has painted their body there, and that footprint is not a wall.
bool gridSegmentClear(const mapping::OccupancyGrid& grid, const Vec2& a, const Vec2& b,
                      double clearNearB = 0.0);

// Grid path following: plans on the inflated known grid (unknown traversable)
// and chases a lookahead point along the path.
class Navigator {
 public:
  explicit Navigator(const NavigatorParams& p = {}) : params_(p) {}

  void setGoal(const Vec2& goal);
  void clear();
  bool hasGoal() const { return goal_.has_value(); }
  const std::optional<Vec2>& goal() const { return goal_; }
  bool arrived(const Vec2& robotPos) const {
    return goal_ && (robotPos - *goal_).norm() <= params_.arriveRadius;
  }
  // True when the last plan attempt found no route.
  bool unreachable() const { return unreachable_; }

  // Velocity command toward the goal, or zero when there is no goal, the goal
  // is reached, or no route exists.
  Vec2 step(double t, const Vec2& robotPos, const mapping::OccupancyGrid& grid,
            double speed);

 private:
  NavigatorParams params_;
  std::optional<Vec2> goal_;
  std::vector<Vec2> path_;
  double lastPlanTime_ = -1e9;
  bool unreachable_ = false;

  void replan(double t, const Vec2& robotPos, const mapping::OccupancyGrid& grid);
};

// Standoff pursuit of the tracked person: advance along the line of sight and
// stop dFollow short, holding the camera on the bearing. When a known wall
// blocks the straight line the navigator routes around it.
sim::RobotCommand pursueTarget(double t, const sim::AgentState& robot, const Vec2& targetPos,
                               const mapping::OccupancyGrid& grid, Navigator& nav,
                               double dFollow, double gain);

}  // namespace rpf::control
