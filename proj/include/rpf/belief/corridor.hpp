#pragma once

#include <vector>

#include "rpf/belief/svr.hpp"
#include "rpf/geometry.hpp"

namespace rpf::belief {

struct CorridorParams {
  int pointCount = 10;    // prediction points
  double dtPred = 0.5;    // seconds between points
  double lambda = 0.01;   // exponential decay of point weights
  double ds = 1.5;        // social-scale standard deviation, meters
  double minSpeed = 0.1;  // floor keeping the covariance invertible
};

struct CorridorPoint {
  Vec2 mu = Vec2::Zero();
  Mat2 sigma = Mat2::Identity();
  Mat2 sigmaInv = Mat2::Identity();
  double weight = 0.0;
};

struct GaussianCorridor {
  std::vector<CorridorPoint> points;
};

// Elongated along the motion direction: eigenvalues (speed*ds)^2 and ds^2.
Mat2 corridorCovariance(double speed, double headingAngle, double ds);

// Normalized exponential-decay weights for point indices 1..n; sums to one and
// strictly decreases for positive lambda.
std::vector<double> corridorWeights(int n, double lambda);

// Prediction points mu(tLost + k*dtPred), k = 1..N, each with an anisotropic
// Gaussian oriented along the local prediction direction.
GaussianCorridor propagateProbability(const TrajectoryPredictor& predictor, double tLost,
                                      double speedAtLoss, const CorridorParams& p);

// Sum of weighted unnormalized Gaussians at x.
double evalExistence(const GaussianCorridor& corridor, const Vec2& x);

}  // namespace rpf::belief
