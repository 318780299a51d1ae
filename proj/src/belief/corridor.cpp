#include "rpf/belief/corridor.hpp"

#include <cmath>

namespace rpf::belief {

Mat2 corridorCovariance(double speed, double headingAngle, double ds) {
  const Mat2 rot = rotation2d(headingAngle);
  Mat2 d = Mat2::Zero();
  d(0, 0) = (speed * ds) * (speed * ds);
  d(1, 1) = ds * ds;
  return rot * d * rot.transpose();
}

std::vector<double> corridorWeights(int n, double lambda) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    w[k - 1] = std::exp(-lambda * k);
    sum += w[k - 1];
  }
  for (auto& v : w) v /= sum;
  return w;
}

GaussianCorridor propagateProbability(const TrajectoryPredictor& predictor, double tLost,
                                      double speedAtLoss, const CorridorParams& p) {
  GaussianCorridor corridor;
  const auto weights = corridorWeights(p.pointCount, p.lambda);
  std::vector<Vec2> mu(p.pointCount);
  for (int k = 1; k <= p.pointCount; ++k) mu[k - 1] = predictor.predict(tLost + k * p.dtPred);

  const double speed = std::max(speedAtLoss, p.minSpeed);
  double heading = 0.0;  // the last point reuses the previous direction
  for (int k = 0; k < p.pointCount; ++k) {
    if (k + 1 < p.pointCount) {
      const Vec2 step = mu[k + 1] - mu[k];
      if (step.norm() > 1e-6) heading = std::atan2(step.y(), step.x());
    }
    CorridorPoint pt;
    pt.mu = mu[k];
    pt.sigma = corridorCovariance(speed, heading, p.ds);
    pt.sigmaInv = pt.sigma.inverse();
    pt.weight = weights[k];
    corridor.points.push_back(pt);
  }
  return corridor;
}

double evalExistence(const GaussianCorridor& corridor, const Vec2& x) {
  double v = 0.0;
  for (const auto& pt : corridor.points) {
    const Vec2 d = x - pt.mu;
    v += pt.weight * std::exp(-0.5 * d.dot(pt.sigmaInv * d));
  }
  return v;
}

}  // namespace rpf::belief
