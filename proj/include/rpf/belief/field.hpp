#pragma once

#include <optional>
#include <vector>

#include "rpf/belief/corridor.hpp"
#include "rpf/mapping/frontier.hpp"
#include "rpf/mapping/shortest_path.hpp"

namespace rpf::belief {

struct BeliefParams {
  double sigmaGoal = 1.0;  // goal field kernel width
  double vMax = 1.5;       // fastest travel assumed for the lost person
  double rAdj = 2.0;       // information-gain neighborhood radius
  double rObs = 1.0;       // obstacle proximity scale in the risk term
  double deltaRisk = 1e-3;
  double dsRisk = 1.5;  // pedestrian spacing scale in the risk term
  double obstacleSearchRadius = 12.0;
  double parentMaxDist = 6.0;
  double inflateRadius = 0.3;  // person-sized inflation for reachability queries
  bool fullEntropy = false;    // off: -p*log2(p) per cell as printed
  int minFrontierCells = 3;
};

struct FrontierCandidate {
  int id = 0;
  Vec2 position = Vec2::Zero();
  double vG = 0, vC = 0, vE = 0, vP = 0;  // normalized components as summed into W
  double eta = 0;
  double weight = 0;
};

// Per-cell entropy contribution used by the information gain sum.
double cellEntropy(double p, bool fullEntropy);

// Entropy summed over grid cells within rAdj of x.
double informationGain(const mapping::OccupancyGrid& grid, const Vec2& x,
                       const BeliefParams& p);

// max(Phi)/(R + delta): crowd sparsity over obstacle proximity. pedestrians
// are current non-target person positions; no pedestrians means Phi = 1.
double collisionRiskScore(const mapping::OccupancyGrid& grid, const Vec2& x,
                          const std::vector<Vec2>& pedestrians, const BeliefParams& p);

// 1 when the lost person could have reached the candidate by now, else 0.
// Distances come from a field rooted at the loss position; unreachable -> 0.
double inferenceFactor(const mapping::DistanceField& fromLost, const Vec2& candidate,
                       double elapsed, double vMax);

// Decayed parent weight: parentWeight * exp(-dist/epsilon).
double inheritProbability(double parentWeight, double parentDist, double epsilon);

struct BeliefCycleInput {
  const mapping::OccupancyGrid* grid = nullptr;
  Vec2 lostPosition = Vec2::Zero();
  double lostTime = 0.0;
  double now = 0.0;
  const GaussianCorridor* corridor = nullptr;  // null -> existence term is zero
  std::vector<Vec2> pedestrians;
  const std::vector<FrontierCandidate>* previousGeneration = nullptr;
  bool noInferenceFactor = false;
  bool noInheritance = false;
};

struct BeliefCycleResult {
  std::vector<FrontierCandidate> candidates;
  std::optional<Vec2> goal;  // empty -> no viable candidate; fall back to the loss position
  int bestIndex = -1;
};

// One planning cycle: frontier candidates scored by normalized information
// gain, risk, existence, inherited weight, gated by the inference factor.
// The goal is the position of the highest-weight candidate, which coincides
// with the argmax of the Gaussian goal field built from the same weights.
BeliefCycleResult selectSearchGoal(const BeliefCycleInput& in, const BeliefParams& p);

// Dense goal-field evaluation, exposed for equivalence checks and debugging.
double evalGoalField(const std::vector<FrontierCandidate>& candidates, const Vec2& x,
                     double sigmaGoal);

}  // namespace rpf::belief
