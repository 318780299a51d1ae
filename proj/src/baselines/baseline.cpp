#include "rpf/baselines/baseline.hpp"

#include <algorithm>
#include <cmath>

namespace rpf::baselines {

namespace {
constexpr double kFullTurn = 2.0 * M_PI;
}

BaselineController::BaselineController(const BaselineConfig& cfg)
    : cfg_(cfg), navigator_(cfg.navigator) {}

const char* BaselineController::phaseName() const {
  switch (phase_) {
    case Phase::kFollowing: return "following";
    case Phase::kGotoLost: return "goto_lost";
    case Phase::kGotoPred: return "goto_pred";
    case Phase::kScan: return "scan";
    case Phase::kGotoFrontier: return "goto_frontier";
    case Phase::kHoldStill: return "idle";
  }
  return "?";
}

void BaselineController::startSearch(double t, const perception::TargetTracker& tracker,
                                     const mapping::OccupancyGrid& grid) {
  (void)t;
  searchInit_ = true;
  failedFrontiers_.clear();
  lostPosition_ = tracker.lastSample().position;
  Vec2 goal = lostPosition_;
  phase_ = Phase::kGotoLost;
  if (predictive()) {
    belief::TrajectoryPredictor pred;
    try {
      pred.fit(tracker.history(), cfg_.svr);
      Vec2 g = pred.predict(tracker.lostTime() + cfg_.predictAhead);
      const auto& geo = grid.geometry();
      g.x() = std::clamp(g.x(), geo.origin.x() + geo.resolution,
                         geo.origin.x() + geo.width * geo.resolution - geo.resolution);
      g.y() = std::clamp(g.y(), geo.origin.y() + geo.resolution,
                         geo.origin.y() + geo.height * geo.resolution - geo.resolution);
      goal = g;
      phase_ = Phase::kGotoPred;
    } catch (const std::invalid_argument&) {
      // Not enough history to extrapolate; head for the last known spot.
    }
  }
  navigator_.setGoal(goal);
}

bool BaselineController::pickFrontier(const Vec2& robotPos, const mapping::OccupancyGrid& grid) {
  mapping::FrontierParams fp;
  fp.minCells = cfg_.minFrontierCells;
  const auto frontiers = mapping::detectFrontiers(grid, fp);
  if (frontiers.empty()) return false;

  const auto rejected = [&](const Vec2& c) {
    return std::any_of(failedFrontiers_.begin(), failedFrontiers_.end(),
                       [&](const Vec2& f) { return (f - c).norm() < 0.5; });
  };

  mapping::PathQueryOptions opt;
  opt.inflateRadius = cfg_.navigator.inflateRadius;
  std::optional<mapping::DistanceField> field;
  try {
    field = mapping::computeDistanceField(grid, robotPos, opt);
  } catch (const std::invalid_argument&) {
  }

  const mapping::Frontier* best = nullptr;
  double bestD = mapping::DistanceField::kUnreachable;
  if (field) {
    for (const auto& f : frontiers) {
      if (rejected(f.centroid)) continue;
      const double d = field->atPosition(f.centroid);
      if (d < bestD) {
        bestD = d;
        best = &f;
      }
    }
  }
  if (!best) {
    // None priced by the grid; fall back to straight-line nearness.
    double bestE = std::numeric_limits<double>::infinity();
    for (const auto& f : frontiers) {
      if (rejected(f.centroid)) continue;
      const double d = (f.centroid - robotPos).norm();
      if (d < bestE) {
        bestE = d;
        best = &f;
      }
    }
  }
  if (!best) return false;
  navigator_.setGoal(best->centroid);
  phase_ = Phase::kGotoFrontier;
  return true;
}

sim::RobotCommand BaselineController::tick(double t, const sim::AgentState& robot,
                                           const std::vector<perception::Detection>& detections,
                                           const perception::TargetTracker& tracker,
                                           const mapping::OccupancyGrid& grid) {
  (void)detections;
  sim::RobotCommand cmd;
  if (tracker.status() == perception::TrackStatus::kTracked) {
    phase_ = Phase::kFollowing;
    searchInit_ = false;
    return control::pursueTarget(t, robot, tracker.lastSample().position, grid, navigator_,
                                 cfg_.dFollow, cfg_.followGain);
  }
  if (tracker.status() == perception::TrackStatus::kUntracked) {
    phase_ = Phase::kFollowing;
    return cmd;
  }

  if (!searchInit_) startSearch(t, tracker, grid);

  for (int hop = 0; hop < 3; ++hop) {
    switch (phase_) {
      case Phase::kGotoLost:
      case Phase::kGotoPred:
      case Phase::kGotoFrontier: {
        cmd.velocity = navigator_.step(t, robot.position, grid, robot.speedLimit);
        if (navigator_.unreachable()) {
          if (phase_ == Phase::kGotoPred) {
            navigator_.setGoal(lostPosition_);
            phase_ = Phase::kGotoLost;
            continue;
          }
          if (phase_ == Phase::kGotoFrontier) {
            if (navigator_.goal()) failedFrontiers_.push_back(*navigator_.goal());
            if (!pickFrontier(robot.position, grid)) phase_ = Phase::kHoldStill;
            continue;
          }
          // Even the loss position has no route; sweep from here.
          phase_ = Phase::kScan;
          scanStart_ = t;
          continue;
        }
        if (navigator_.arrived(robot.position)) {
          phase_ = Phase::kScan;
          scanStart_ = t;
          continue;
        }
        return cmd;
      }
      case Phase::kScan: {
        if ((t - scanStart_) * cfg_.scanRate >= kFullTurn) {
          failedFrontiers_.clear();
          if (nbv() && pickFrontier(robot.position, grid)) continue;
          phase_ = Phase::kHoldStill;
          continue;
        }
        cmd.velocity = Vec2::Zero();
        cmd.headingRate = cfg_.scanRate;
        return cmd;
      }
      case Phase::kHoldStill:
        return cmd;
      case Phase::kFollowing:
        phase_ = Phase::kGotoLost;
        navigator_.setGoal(lostPosition_);
        continue;
    }
  }
  return cmd;
}

}  // namespace rpf::baselines
