#include "rpf/control/navigator.hpp"

#include <algorithm>
#include <cmath>

namespace rpf::control {

bool gridSegmentClear(const mapping::OccupancyGrid& grid, const Vec2& a, const Vec2& b,
                      double clearNearB) {
  bool clear = true;
  traverseRay(grid.geometry(), a, b, [&](const CellIndex& c) {
    if (grid.isOccupied(c) &&
        (grid.geometry().cellCenter(c) - b).norm() > clearNearB) {
      clear = false;
      return false;
    }
    return true;
  });
  return clear;
}

void Navigator::setGoal(const Vec2& goal) {
  if (goal_ && (*goal_ - goal).norm() < 1e-9) return;
  goal_ = goal;
  path_.clear();
  lastPlanTime_ = -1e9;
  unreachable_ = false;
}

void Navigator::clear() {
  goal_.reset();
  path_.clear();
  unreachable_ = false;
}

void Navigator::replan(double t, const Vec2& robotPos,
                       const mapping::OccupancyGrid& grid) {
  mapping::PathQueryOptions opts;
  opts.inflateRadius = params_.inflateRadius;
  auto path = mapping::planPath(grid, robotPos, *goal_, opts);
  unreachable_ = !path.has_value();
  path_ = path ? std::move(*path) : std::vector<Vec2>{};
  lastPlanTime_ = t;
}

Vec2 Navigator::step(double t, const Vec2& robotPos,
                     const mapping::OccupancyGrid& grid, double speed) {
  if (!goal_ || arrived(robotPos)) return Vec2::Zero();
  if (path_.empty() || t - lastPlanTime_ >= params_.replanPeriod) {
    replan(t, robotPos, grid);
  }
  if (path_.empty()) {
    // No grid route; close range is usually a same-cell artifact, so walk
    // straight at the goal rather than stalling.
    if ((*goal_ - robotPos).norm() < 2.0 * params_.lookahead) {
      Vec2 d = *goal_ - robotPos;
      double n = d.norm();
      return n < 1e-9 ? Vec2::Zero() : Vec2(d * (speed / n));
    }
    return Vec2::Zero();
  }

  // Lookahead point: nearest path vertex, then advance by the lookahead arc.
  std::size_t nearest = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < path_.size(); ++i) {
    double d = (path_[i] - robotPos).squaredNorm();
    if (d < best) {
      best = d;
      nearest = i;
    }
  }
  Vec2 aim = path_.back();
  double remaining = params_.lookahead;
  for (std::size_t i = nearest; i + 1 < path_.size(); ++i) {
    double seg = (path_[i + 1] - path_[i]).norm();
    if (seg >= remaining) {
      aim = path_[i] + (path_[i + 1] - path_[i]) * (remaining / std::max(seg, 1e-9));
      break;
    }
    remaining -= seg;
  }
  Vec2 d = aim - robotPos;
  double n = d.norm();
  if (n < 1e-9) return Vec2::Zero();
  return d * (speed / n);
}

sim::RobotCommand pursueTarget(double t, const sim::AgentState& robot, const Vec2& targetPos,
                               const mapping::OccupancyGrid& grid, Navigator& nav,
                               double dFollow, double gain) {
  sim::RobotCommand cmd;
  const Vec2 toTarget = targetPos - robot.position;
  const double dist = toTarget.norm();
  if (dist < 1e-9) return cmd;

  // Camera stays on the person in both branches; the planner only moves the base.
  const double bearing = std::atan2(toTarget.y(), toTarget.x());
  cmd.headingRate = std::clamp(2.0 * wrapAngle(bearing - robot.heading), -2.0, 2.0);

  // The person's own body shows up in the lidar map as occupied cells around
  // targetPos; 0.75 covers body radius plus paint quantization.
  if (!gridSegmentClear(grid, robot.position, targetPos, 0.75)) {
    // Known wall between us, likely mid-corner; route around it.
    nav.setGoal(targetPos);
    cmd.velocity = nav.step(t, robot.position, grid, robot.speedLimit);
    return cmd;
  }
  nav.clear();

  const Vec2 dir = toTarget / dist;
  const double advance = dist - dFollow;
  if (advance > 0) cmd.velocity = dir * std::min(gain * advance, robot.speedLimit);
  return cmd;
}

}  // namespace rpf::control
