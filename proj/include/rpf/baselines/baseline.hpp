#pragma once

#include <string>
#include <vector>

#include "rpf/belief/svr.hpp"
#include "rpf/control/navigator.hpp"
#include "rpf/mapping/frontier.hpp"
#include "rpf/perception/tracker.hpp"

namespace rpf::baselines {

enum class BaselineKind { kGtll, kGtpl, kGtllNbv, kGtplNbv };

struct BaselineConfig {
  BaselineKind kind = BaselineKind::kGtll;
  double dFollow = 1.5;
  double followGain = 1.8;
  double predictAhead = 2.0;  // seconds past the loss the predicted goal aims at
  double scanRate = 1.0;      // rad/s during the in-place sweep
  int minFrontierCells = 3;
  control::NavigatorParams navigator;
  belief::SvrParams svr;
};

// Go-to-last-location and go-to-predicted-location searchers, optionally
// extended with a nearest-frontier loop. On a loss the robot heads for the
// last known (or predicted) spot, sweeps a full turn there, then either holds
// still or keeps visiting the nearest frontier. Reads only the map and the
// track; never the belief or crowd fields.
class BaselineController {
 public:
  explicit BaselineController(const BaselineConfig& cfg = {});

  sim::RobotCommand tick(double t, const sim::AgentState& robot,
                         const std::vector<perception::Detection>& detections,
                         const perception::TargetTracker& tracker,
                         const mapping::OccupancyGrid& grid);

  const char* phaseName() const;

 private:
  enum class Phase { kFollowing, kGotoLost, kGotoPred, kScan, kGotoFrontier, kHoldStill };

  BaselineConfig cfg_;
  Phase phase_ = Phase::kFollowing;
  control::Navigator navigator_;
  bool searchInit_ = false;
  Vec2 lostPosition_ = Vec2::Zero();
  double scanStart_ = 0.0;
  std::vector<Vec2> failedFrontiers_;

  bool nbv() const {
    return cfg_.kind == BaselineKind::kGtllNbv || cfg_.kind == BaselineKind::kGtplNbv;
  }
  bool predictive() const {
    return cfg_.kind == BaselineKind::kGtpl || cfg_.kind == BaselineKind::kGtplNbv;
  }
  void startSearch(double t, const perception::TargetTracker& tracker,
                   const mapping::OccupancyGrid& grid);
  bool pickFrontier(const Vec2& robotPos, const mapping::OccupancyGrid& grid);
};

}  // namespace rpf::baselines
