#include "rpf/control/controller.hpp"

#include <algorithm>
#include <cmath>

namespace rpf::control {

const char* modeName(ControlMode m) {
  switch (m) {
    case ControlMode::kFollowing: return "following";
    case ControlMode::kHold: return "hold";
    case ControlMode::kSearchBelief: return "search_belief";
    case ControlMode::kSearchOvertake: return "search_overtake";
    case ControlMode::kSearchFluid: return "search_fluid";
  }
  return "?";
}

SearchController::SearchController(const ControllerConfig& cfg)
    : cfg_(cfg), navigator_(cfg.navigator), dFront_(cfg.potential.dFrontDefault) {}

void SearchController::updateOccluders(double t,
                                       const std::vector<perception::Detection>& detections) {
  for (const auto& d : detections) {
    if (d.isTarget) continue;
    occluderMemory_[d.agentId] = {t, {d.agentId, d.position, d.velocity}};
  }
  for (auto it = occluderMemory_.begin(); it != occluderMemory_.end();) {
    if (t - it->second.lastSeen > cfg_.occluderMemory) it = occluderMemory_.erase(it);
    else ++it;
  }
}

std::vector<dynamic::OccluderTrack> SearchController::liveOccluders(double t) const {
  std::vector<dynamic::OccluderTrack> out;
  for (const auto& [id, e] : occluderMemory_) {
    if (t - e.lastSeen <= cfg_.occluderMemory) out.push_back(e.track);
  }
  return out;
}

void SearchController::beginSearch(double t, const perception::TargetTracker& tracker) {
  (void)t;
  lostPosition_ = tracker.lastSample().position;
  lostTime_ = tracker.lostTime();
  corridor_.reset();
  try {
    predictor_.fit(tracker.history(), cfg_.svr);
    const double speedAtLoss = tracker.lastSample().velocity.norm();
    corridor_ = belief::propagateProbability(predictor_, lostTime_, speedAtLoss, cfg_.corridor);
  } catch (const std::invalid_argument&) {
    // Too little history to extrapolate; the belief field runs without the
    // existence term and navigation falls back to the loss position.
  }
  ledger_.clear();
  unreachableGoals_.clear();
  lastBeliefPlan_ = -1e9;
  stickyOvertakeGoal_.reset();
  navigator_.clear();
  searchActive_ = true;
}

void SearchController::endSearch() {
  searchActive_ = false;
  navigator_.clear();
  stickyOvertakeGoal_.reset();
  ledger_.clear();
  unreachableGoals_.clear();
  corridor_.reset();
}

sim::RobotCommand SearchController::tick(double t, const sim::AgentState& robot,
                                         const std::vector<perception::Detection>& detections,
                                         const perception::TargetTracker& tracker,
                                         const mapping::OccupancyGrid& grid) {
  updateOccluders(t, detections);
  prevStepDir_ = robot.velocity.norm() > 1e-6 ? Vec2(robot.velocity.normalized())
                                              : Vec2(std::cos(robot.heading), std::sin(robot.heading));

  sim::RobotCommand cmd;
  switch (tracker.status()) {
    case perception::TrackStatus::kUntracked:
      mode_ = ControlMode::kFollowing;
      break;
    case perception::TrackStatus::kTracked:
      if (searchActive_) endSearch();
      cmd = followTick(t, robot, tracker, grid);
      break;
    case perception::TrackStatus::kLost:
      if (t - tracker.lostTime() < cfg_.holdDuration) {
        mode_ = ControlMode::kHold;
        cmd = lastCommand_;
        break;
      }
      if (!searchActive_) beginSearch(t, tracker);
      if (tracker.lossKind() == perception::OcclusionKind::kDynamic) {
        cmd = dynamicTick(t, robot, grid);
      } else {
        cmd = beliefTick(t, robot, grid);
      }
      break;
  }
  lastCommand_ = cmd;
  return cmd;
}

sim::RobotCommand SearchController::followTick(double t, const sim::AgentState& robot,
                                               const perception::TargetTracker& tracker,
                                               const mapping::OccupancyGrid& grid) {
  mode_ = ControlMode::kFollowing;
  const auto& s = tracker.lastSample();
  const double dist = (s.position - robot.position).norm();
  if (dist > 1e-9) dFront_ = dist;
  return pursueTarget(t, robot, s.position, grid, navigator_, cfg_.dFollow, cfg_.followGain);
}

sim::RobotCommand SearchController::beliefTick(double t, const sim::AgentState& robot,
                                               const mapping::OccupancyGrid& grid) {
  mode_ = ControlMode::kSearchBelief;

  const bool periodDue = t - lastBeliefPlan_ >= cfg_.beliefReplanPeriod;
  const bool arrivedDue = navigator_.arrived(robot.position) && t - lastBeliefPlan_ >= 0.3;
  if (periodDue || arrivedDue || !navigator_.hasGoal()) {
    belief::BeliefCycleInput in;
    in.grid = &grid;
    in.lostPosition = lostPosition_;
    in.lostTime = lostTime_;
    in.now = t;
    in.corridor = corridor_ ? &*corridor_ : nullptr;
    for (const auto& o : liveOccluders(t)) in.pedestrians.push_back(o.position);
    in.previousGeneration = ledger_.empty() ? nullptr : &ledger_;
    in.noInferenceFactor = cfg_.ablations.noInferenceFactor;
    in.noInheritance = cfg_.ablations.noInheritance;

    const auto result = belief::selectSearchGoal(in, cfg_.belief);
    ledger_ = result.candidates;
    for (size_t i = 0; i < result.candidates.size(); ++i) {
      const auto& c = result.candidates[i];
      beliefDebug_.push_back({t, c.id, c.position, c.vG, c.vC, c.vE, c.vP, c.eta, c.weight,
                              static_cast<int>(i) == result.bestIndex});
    }

    // Highest-weight candidate the navigator has not already failed to reach.
    std::optional<Vec2> goal;
    std::vector<int> order(result.candidates.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return result.candidates[a].weight > result.candidates[b].weight;
    });
    for (int i : order) {
      const auto& c = result.candidates[i];
      if (c.weight <= 0) break;
      const bool bad = std::any_of(unreachableGoals_.begin(), unreachableGoals_.end(),
                                   [&](const Vec2& g) { return (g - c.position).norm() < 0.3; });
      if (!bad) {
        goal = c.position;
        break;
      }
    }
    navigator_.setGoal(goal.value_or(lostPosition_));
    lastBeliefPlan_ = t;
  }

  sim::RobotCommand cmd;
  cmd.velocity = navigator_.step(t, robot.position, grid, robot.speedLimit);
  if (navigator_.unreachable() && navigator_.goal() &&
      (*navigator_.goal() - lostPosition_).norm() > 1e-6) {
    unreachableGoals_.push_back(*navigator_.goal());
    lastBeliefPlan_ = -1e9;  // pick a fresh candidate next tick
    navigator_.setGoal(lostPosition_);
    cmd.velocity = navigator_.step(t, robot.position, grid, robot.speedLimit);
  }
  if (cmd.velocity.norm() < 0.05) {
    // Standing at the goal; sweep the camera while the next cycle matures.
    cmd.headingRate = 1.0;
  }
  return cmd;
}

sim::RobotCommand SearchController::dynamicTick(double t, const sim::AgentState& robot,
                                                const mapping::OccupancyGrid& grid) {
  const auto occluders = liveOccluders(t);
  if (occluders.empty()) return beliefTick(t, robot, grid);

  const auto& mask = inflation_.get(grid, cfg_.potential.inflateRadius);

  std::optional<dynamic::OvertakeEval> eval;
  double cStar = std::numeric_limits<double>::infinity();
  try {
    eval = dynamic::evaluateOvertake(robot.position, robot.heading, occluders, grid, mask,
                                     cfg_.camera, dFront_, cfg_.potential,
                                     stickyOvertakeGoal_);
    cStar = eval->cost;
  } catch (const std::runtime_error&) {
    // Every candidate ahead is blocked; treated as an unaffordable pass.
  }

  double vMin = std::numeric_limits<double>::infinity();
  double vMax = 0.0;
  for (const auto& o : occluders) {
    const double v = o.velocity.norm();
    vMin = std::min(vMin, v);
    vMax = std::max(vMax, v);
  }

  auto strategy = dynamic::chooseDynamicStrategy(cStar, vMin, vMax, cfg_.thresholds);
  if (cfg_.ablations.noOvertake && strategy == dynamic::DynamicStrategy::kOvertake)
    strategy = dynamic::DynamicStrategy::kFluidFollow;
  if (cfg_.ablations.noFluid && strategy == dynamic::DynamicStrategy::kFluidFollow)
    strategy = eval ? dynamic::DynamicStrategy::kOvertake : dynamic::DynamicStrategy::kBelief;

  sim::RobotCommand cmd;
  Vec2 rowGoal = robot.position;
  switch (strategy) {
    case dynamic::DynamicStrategy::kBelief: {
      cmd = beliefTick(t, robot, grid);
      if (navigator_.goal()) rowGoal = *navigator_.goal();
      break;
    }
    case dynamic::DynamicStrategy::kOvertake: {
      mode_ = ControlMode::kSearchOvertake;
      stickyOvertakeGoal_ = eval->goal;
      rowGoal = eval->goal;
      const dynamic::OccluderTrack* nearest = &occluders.front();
      for (const auto& o : occluders)
        if ((o.position - robot.position).norm() < (nearest->position - robot.position).norm())
          nearest = &o;
      const double g = dynamic::observationGain(cfg_.camera, robot.position,
                                                eval->anticipatedTarget, nearest->position);
      const auto paths = dynamic::predictOccluders(occluders, grid, cfg_.potential);
      cmd.velocity = dynamic::planOvertakeStep(robot.position, eval->goal, g, paths, grid,
                                               mask, cfg_.potential, robot.speedLimit,
                                               prevStepDir_);
      break;
    }
    case dynamic::DynamicStrategy::kFluidFollow: {
      mode_ = ControlMode::kSearchFluid;
      try {
        const auto fg = dynamic::fluidFollowGoal(robot.position, robot.heading,
                                                 robot.velocity, occluders, grid, mask,
                                                 cfg_.fluid);
        rowGoal = fg.goal;
        const Vec2 d = fg.goal - robot.position;
        const double n = d.norm();
        if (n > 1e-9) cmd.velocity = d * (std::min(robot.speedLimit, 2.0 * n) / n);
      } catch (const std::runtime_error&) {
        cmd = lastCommand_;
      }
      break;
    }
  }

  dynamicDebug_.push_back({t, strategyName(strategy), cStar, vMin, vMax, rowGoal});
  return cmd;
}

}  // namespace rpf::control
