#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rpf/belief/corridor.hpp"
#include "rpf/belief/field.hpp"
#include "rpf/belief/svr.hpp"
#include "rpf/control/navigator.hpp"
#include "rpf/dynamic/fluid.hpp"
#include "rpf/dynamic/potential.hpp"
#include "rpf/dynamic/strategy.hpp"
#include "rpf/perception/tracker.hpp"

namespace rpf::control {

enum class ControlMode { kFollowing, kHold, kSearchBelief, kSearchOvertake, kSearchFluid };

const char* modeName(ControlMode m);

struct AblationFlags {
  bool noInferenceFactor = false;  // candidates beyond reach are not zeroed
  bool noInheritance = false;      // candidate weight never carries across cycles
  bool noOvertake = false;         // person-caused losses never try to pass
  bool noFluid = false;            // person-caused losses never flow with the crowd
};

struct ControllerConfig {
  double dFollow = 1.5;        // standoff kept behind the tracked person
  double followGain = 1.8;
  double holdDuration = 0.7;   // keep the last command this long after a loss
  double beliefReplanPeriod = 1.0;
  double occluderMemory = 0.5;  // seconds a detection stays a live occluder track
  NavigatorParams navigator;
  belief::BeliefParams belief;
  belief::SvrParams svr;
  belief::CorridorParams corridor;
  dynamic::PotentialParams potential;
  dynamic::FluidParams fluid;
  dynamic::StrategyThresholds thresholds;
  perception::CameraParams camera;
  AblationFlags ablations;
};

struct BeliefDebugRow {
  double t = 0.0;
  int candidateId = 0;
  Vec2 position = Vec2::Zero();
  double vG = 0, vC = 0, vE = 0, vP = 0, eta = 0, weight = 0;
  bool chosen = false;
};

struct DynamicDebugRow {
  double t = 0.0;
  std::string strategy;
  double cStar = 0.0;
  double vOccMin = 0.0;
  double vOccMax = 0.0;
  Vec2 goal = Vec2::Zero();
};

// Person-following state machine. While tracked it keeps a fixed standoff
// behind the person; after a loss it briefly holds the last command, then
// searches: wall-caused losses run the frontier belief planner, person-caused
// losses pick per step between passing the crowd, flowing with it, or falling
// back to the belief planner.
class SearchController {
 public:
  explicit SearchController(const ControllerConfig& cfg = {});

  sim::RobotCommand tick(double t, const sim::AgentState& robot,
                         const std::vector<perception::Detection>& detections,
                         const perception::TargetTracker& tracker,
                         const mapping::OccupancyGrid& grid);

  ControlMode mode() const { return mode_; }
  const std::vector<BeliefDebugRow>& beliefDebug() const { return beliefDebug_; }
  const std::vector<DynamicDebugRow>& dynamicDebug() const { return dynamicDebug_; }
  const ControllerConfig& config() const { return cfg_; }

 private:
  struct OccluderMemoryEntry {
    double lastSeen = 0.0;
    dynamic::OccluderTrack track;
  };

  ControllerConfig cfg_;
  ControlMode mode_ = ControlMode::kFollowing;
  sim::RobotCommand lastCommand_;
  Navigator navigator_;
  mapping::InflationCache inflation_;

  std::map<int, OccluderMemoryEntry> occluderMemory_;
  double dFront_;

  bool searchActive_ = false;
  belief::TrajectoryPredictor predictor_;
  std::optional<belief::GaussianCorridor> corridor_;
  Vec2 lostPosition_ = Vec2::Zero();
  double lostTime_ = 0.0;
  double lastBeliefPlan_ = -1e9;
  std::vector<belief::FrontierCandidate> ledger_;
  std::vector<Vec2> unreachableGoals_;
  std::optional<Vec2> stickyOvertakeGoal_;
  Vec2 prevStepDir_ = Vec2(1, 0);

  std::vector<BeliefDebugRow> beliefDebug_;
  std::vector<DynamicDebugRow> dynamicDebug_;

  void updateOccluders(double t, const std::vector<perception::Detection>& detections);
  std::vector<dynamic::OccluderTrack> liveOccluders(double t) const;
  void beginSearch(double t, const perception::TargetTracker& tracker);
  void endSearch();

  sim::RobotCommand followTick(double t, const sim::AgentState& robot,
                               const perception::TargetTracker& tracker,
                               const mapping::OccupancyGrid& grid);
  sim::RobotCommand beliefTick(double t, const sim::AgentState& robot,
                               const mapping::OccupancyGrid& grid);
  sim::RobotCommand dynamicTick(double t, const sim::AgentState& robot,
                                const mapping::OccupancyGrid& grid);
};

}  // namespace rpf::control
