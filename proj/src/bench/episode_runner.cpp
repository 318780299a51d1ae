#include "rpf/bench/episode_runner.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "rpf/mapping/shortest_path.hpp"
#include "rpf/perception/sense.hpp"

namespace rpf::bench {

namespace {

baselines::BaselineKind baselineKind(MethodSpec::Family f) {
  switch (f) {
    case MethodSpec::Family::kGtll: return baselines::BaselineKind::kGtll;
    case MethodSpec::Family::kGtpl: return baselines::BaselineKind::kGtpl;
    case MethodSpec::Family::kGtllNbv: return baselines::BaselineKind::kGtllNbv;
    case MethodSpec::Family::kGtplNbv: return baselines::BaselineKind::kGtplNbv;
    case MethodSpec::Family::kRpfSearch: break;
  }
  throw std::logic_error("not a baseline family");
}

}  // namespace

EpisodeRecord runEpisode(const sim::Scenario& scenario, const MethodSpec& method,
                         uint64_t seed, const RunOptions& opt) {
  sim::ScenarioInstance inst = sim::instantiate(scenario, seed);

  // One flat walker list for physics and sensing; the target is entry 0.
  std::vector<sim::ScriptedAgent> walkers;
  walkers.reserve(inst.pedestrians.size() + 1);
  walkers.push_back(inst.target);
  for (auto& p : inst.pedestrians) walkers.push_back(p);
  const int targetId = inst.target.state.id;

  sim::AgentState robot = inst.robot;
  mapping::OccupancyGrid grid(scenario.world.geometry());
  perception::Sensor sensor(opt.controller.camera);
  perception::TargetTracker tracker;

  const bool isRpf = method.family == MethodSpec::Family::kRpfSearch;
  std::unique_ptr<control::SearchController> rpf;
  std::unique_ptr<baselines::BaselineController> baseline;
  if (isRpf) {
    control::ControllerConfig cfg = opt.controller;
    cfg.ablations = method.ablations;
    rpf = std::make_unique<control::SearchController>(cfg);
  } else {
    baselines::BaselineConfig cfg = opt.baseline;
    cfg.kind = baselineKind(method.family);
    baseline = std::make_unique<baselines::BaselineController>(cfg);
  }

  EpisodeRecord rec;
  rec.scenario = inst.name;
  rec.method = method.id;
  rec.seed = seed;
  rec.timeLimit = inst.timeLimit;
  rec.timestep = inst.timestep;

  const double dt = inst.timestep;
  const int stepCount = static_cast<int>(std::floor(inst.timeLimit / dt + 0.5));

  bool awaitingRefind = false;
  Vec2 lossRobotPos = Vec2::Zero();
  Vec2 refindTargetPos = Vec2::Zero();
  double distSum = 0.0;
  std::vector<sim::AgentState> scanAgents(walkers.size());

  for (int k = 0; k < stepCount; ++k) {
    const double t = k * dt;

    for (size_t i = 0; i < walkers.size(); ++i) scanAgents[i] = walkers[i].state;
    mapping::integrateScan(grid, scenario.world, robot.position, scanAgents, opt.lidar);

    const auto detections = sensor.sense(scenario.world, robot, walkers, targetId, t);
    tracker.update(t, detections);

    if (!rec.everLost && tracker.justLost()) {
      rec.everLost = true;
      rec.tFirstLoss = t;
      lossRobotPos = robot.position;
      awaitingRefind = true;
    }
    if (awaitingRefind && tracker.justReacquired()) {
      rec.success = true;
      rec.tRefind = t - rec.tFirstLoss;
      refindTargetPos = tracker.lastSample().position;
      awaitingRefind = false;
    }

    sim::RobotCommand cmd;
    const char* mode;
    if (isRpf) {
      cmd = rpf->tick(t, robot, detections, tracker, grid);
      mode = control::modeName(rpf->mode());
    } else {
      cmd = baseline->tick(t, robot, detections, tracker, grid);
      mode = baseline->phaseName();
    }

    const double dist = (robot.position - walkers[0].state.position).norm();
    distSum += dist;
    if (rec.modeTimeline.empty() || rec.modeTimeline.back().second != mode)
      rec.modeTimeline.emplace_back(t, mode);
    if (opt.keepSteps)
      rec.steps.push_back({t, robot.position, walkers[0].state.position, mode, dist});

    const Vec2 before = robot.position;
    sim::stepWorld(scenario.world, robot, cmd, walkers, t, dt, opt.social);
    if (awaitingRefind) rec.pathLength += (robot.position - before).norm();
  }

  if (!rec.everLost) rec.success = true;
  rec.edtotMean = stepCount > 0 ? distSum / stepCount : 0.0;

  if (rec.success && rec.everLost) {
    mapping::PathQueryOptions pq;
    pq.inflateRadius = opt.controller.navigator.inflateRadius;
    auto d = mapping::shortestDistance(grid, lossRobotPos, refindTargetPos, pq);
    const double ell = d ? *d : (refindTargetPos - lossRobotPos).norm();
    rec.shortestLength = std::min(ell, rec.pathLength);
  }

  if (isRpf && opt.keepDebug) {
    rec.beliefRows = rpf->beliefDebug();
    rec.dynamicRows = rpf->dynamicDebug();
  }
  if (opt.finalGrid) *opt.finalGrid = grid;
  return rec;
}

}  // namespace rpf::bench
