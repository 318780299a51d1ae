#pragma once

#include "rpf/bench/episode_record.hpp"
#include "rpf/bench/method.hpp"
#include "rpf/mapping/occupancy_grid.hpp"
#include "rpf/sim/scenario.hpp"
#include "rpf/sim/social_force.hpp"

namespace rpf::bench {

struct RunOptions {
  bool keepSteps = false;
  bool keepDebug = false;
  mapping::LidarParams lidar;
  sim::SocialForceParams social;
  control::ControllerConfig controller;
  baselines::BaselineConfig baseline;
  mapping::OccupancyGrid* finalGrid = nullptr;  // filled at episode end when set
};

// Simulates one seeded run of method on scenario. The whole episode always
// plays out to the time limit so the distance series covers every step.
// Per step: range scan into the grid, camera detections, track update,
// controller command, state recording, then world integration.
EpisodeRecord runEpisode(const sim::Scenario& scenario, const MethodSpec& method,
                         uint64_t seed, const RunOptions& opt = {});

}  // namespace rpf::bench
