#include "rpf/belief/field.hpp"

#include <algorithm>
#include <cmath>

namespace rpf::belief {

double cellEntropy(double p, bool fullEntropy) {
  auto term = [](double q) { return q > 0.0 ? -q * std::log2(q) : 0.0; };
  return fullEntropy ? term(p) + term(1.0 - p) : term(p);
}

double informationGain(const mapping::OccupancyGrid& grid, const Vec2& x,
                       const BeliefParams& p) {
  const GridGeometry& geo = grid.geometry();
  const CellIndex c = geo.worldToCell(x);
  const int r = static_cast<int>(std::ceil(p.rAdj / geo.resolution)) + 1;
  double sum = 0.0;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      const CellIndex n{c.x + dx, c.y + dy};
      if (!geo.inBounds(n)) continue;
      if ((geo.cellCenter(n) - x).norm() > p.rAdj) continue;
      sum += cellEntropy(grid.probability(n), p.fullEntropy);
    }
  }
  return sum;
}

double collisionRiskScore(const mapping::OccupancyGrid& grid, const Vec2& x,
                          const std::vector<Vec2>& pedestrians, const BeliefParams& p) {
  double phi = 1.0;  // nobody nearby means maximum sparsity
  if (!pedestrians.empty()) {
    double best = 0.0;
    for (const auto& q : pedestrians) {
      const double d2 = (x - q).squaredNorm();
      best = std::max(best, std::exp(-d2 / (2.0 * p.dsRisk * p.dsRisk)));
    }
    phi = 1.0 - best;
  }

  const GridGeometry& geo = grid.geometry();
  const CellIndex c = geo.worldToCell(x);
  const int r = static_cast<int>(std::ceil(p.obstacleSearchRadius / geo.resolution));
  double dObs = p.obstacleSearchRadius;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      const CellIndex n{c.x + dx, c.y + dy};
      if (!geo.inBounds(n) || !grid.isOccupied(n)) continue;
      dObs = std::min(dObs, (geo.cellCenter(n) - x).norm());
    }
  }
  const double rTerm = std::exp(-dObs / p.rObs);
  return phi / (rTerm + p.deltaRisk);
}

double inferenceFactor(const mapping::DistanceField& fromLost, const Vec2& candidate,
                       double elapsed, double vMax) {
  const double d = fromLost.atPosition(candidate);
  if (d == mapping::DistanceField::kUnreachable) return 0.0;
  return elapsed * vMax > d ? 1.0 : 0.0;
}

double inheritProbability(double parentWeight, double parentDist, double epsilon) {
  if (epsilon <= 0.0) return 0.0;
  return parentWeight * std::exp(-parentDist / epsilon);
}

namespace {

void minMaxNormalize(std::vector<double>& v) {
  if (v.empty()) return;
  const auto [mnIt, mxIt] = std::minmax_element(v.begin(), v.end());
  const double mn = *mnIt, mx = *mxIt;
  if (mx - mn < 1e-12) {
    std::fill(v.begin(), v.end(), 0.5);
    return;
  }
  for (auto& x : v) x = (x - mn) / (mx - mn);
}

}  // namespace

BeliefCycleResult selectSearchGoal(const BeliefCycleInput& in, const BeliefParams& p) {
  BeliefCycleResult result;
  const mapping::OccupancyGrid& grid = *in.grid;

  mapping::FrontierParams fp;
  fp.minCells = p.minFrontierCells;
  const auto frontiers = mapping::detectFrontiers(grid, fp);
  if (frontiers.empty()) return result;

  const int n = static_cast<int>(frontiers.size());
  result.candidates.resize(n);
  for (int i = 0; i < n; ++i) {
    result.candidates[i].id = i;
    result.candidates[i].position = frontiers[i].centroid;
  }

  mapping::PathQueryOptions reach;
  reach.inflateRadius = p.inflateRadius;
  const auto fromLost = mapping::computeDistanceField(grid, in.lostPosition, reach);

  std::vector<double> vg(n), vc(n), ve(n);
  for (int i = 0; i < n; ++i) {
    const Vec2& x = result.candidates[i].position;
    vg[i] = informationGain(grid, x, p);
    vc[i] = collisionRiskScore(grid, x, in.pedestrians, p);
    ve[i] = in.corridor ? evalExistence(*in.corridor, x) : 0.0;
    result.candidates[i].eta =
        in.noInferenceFactor
            ? 1.0
            : inferenceFactor(fromLost, x, in.now - in.lostTime, p.vMax);
  }
  minMaxNormalize(vg);
  minMaxNormalize(vc);
  minMaxNormalize(ve);

  const double epsilon = grid.knownFreeBounds().diagonal();
  for (int i = 0; i < n; ++i) {
    FrontierCandidate& cand = result.candidates[i];
    cand.vG = vg[i];
    cand.vC = vc[i];
    cand.vE = ve[i];
    cand.vP = 0.0;
    if (!in.noInheritance && in.previousGeneration && !in.previousGeneration->empty()) {
      const FrontierCandidate* parent = nullptr;
      double bestD = p.parentMaxDist;
      for (const auto& prev : *in.previousGeneration) {
        const double d = (prev.position - cand.position).norm();
        if (d < bestD) {
          bestD = d;
          parent = &prev;
        }
      }
      if (parent) cand.vP = inheritProbability(parent->weight, bestD, epsilon);
    }
    cand.weight = cand.eta * (cand.vG + cand.vC + cand.vE + cand.vP);
  }

  int best = -1;
  for (int i = 0; i < n; ++i) {
    if (result.candidates[i].weight <= 0.0) continue;
    if (best < 0 || result.candidates[i].weight > result.candidates[best].weight) best = i;
  }
  if (best >= 0) {
    result.bestIndex = best;
    result.goal = result.candidates[best].position;
  }
  return result;
}

double evalGoalField(const std::vector<FrontierCandidate>& candidates, const Vec2& x,
                     double sigmaGoal) {
  double v = 0.0;
  for (const auto& c : candidates) {
    const double d2 = (x - c.position).squaredNorm();
    v = std::max(v, c.weight * std::exp(-d2 / (2.0 * sigmaGoal * sigmaGoal)));
  }
  return v;
}

}  // namespace rpf::belief
