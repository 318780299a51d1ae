#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rpf/control/controller.hpp"

namespace rpf::bench {

struct StepRow {
  double t = 0.0;
  Vec2 robot = Vec2::Zero();
  Vec2 target = Vec2::Zero();
  std::string mode;
  double dist = 0.0;
};

// One simulated run. Refind statistics cover the first loss only; success is
// re-identification after that loss (or never losing the target at all).
struct EpisodeRecord {
  std::string scenario;
  std::string method;
  uint64_t seed = 0;
  double timeLimit = 0.0;
  double timestep = 0.0;

  bool success = false;
  bool everLost = false;
  double tFirstLoss = -1.0;  // -1 when never lost
  double tRefind = -1.0;     // seconds from first loss to re-identification
  double pathLength = 0.0;   // robot path walked between loss and re-identification
  // Dijkstra distance on the final map from the robot's position at loss to
  // the target's position at re-identification, capped at pathLength so the
  // optimum never exceeds what was actually walked.
  double shortestLength = 0.0;
  double edtotMean = 0.0;  // mean robot-target distance over every step

  std::vector<std::pair<double, std::string>> modeTimeline;  // mode changes only
  std::vector<StepRow> steps;                                // kept on request
  std::vector<control::BeliefDebugRow> beliefRows;           // kept on request
  std::vector<control::DynamicDebugRow> dynamicRows;
};

}  // namespace rpf::bench
