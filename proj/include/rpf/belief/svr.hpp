#pragma once

#include <deque>
#include <vector>

#include "rpf/geometry.hpp"
#include "rpf/perception/tracker.hpp"

namespace rpf::belief {

struct SvrParams {
  double c = 10.0;
  double epsilon = 0.05;
  double tolerance = 1e-6;
  int maxPasses = 500;
  double bandwidthDivisor = 3.0;  // kernel bandwidth = sample span / this
  double trainWindow = 5.0;       // seconds of history used
  int minSamples = 5;
  double minSpan = 1.0;
};

// Epsilon-insensitive regression of one coordinate against time: linear trend
// fitted by least squares, residual fitted by an RBF-kernel machine trained
// with dual coordinate descent (bias folded into the kernel). The trend term
// is what lets a straight-line walk extrapolate as a straight line.
class KernelRegressor1d {
 public:
  void fit(const std::vector<double>& t, const std::vector<double>& y, const SvrParams& p);
  double predict(double t) const;

 private:
  double intercept_ = 0.0;
  double slope_ = 0.0;
  double t0_ = 0.0;
  double bandwidth_ = 1.0;
  std::vector<double> supportT_;
  std::vector<double> beta_;
};

// Two independent regressors, x(t) and y(t), fitted to the tracked history.
class TrajectoryPredictor {
 public:
  // Uses the last trainWindow seconds of samples. Throws std::invalid_argument
  // ("insufficient history") below minSamples samples or minSpan span.
  void fit(const std::deque<perception::TrackSample>& history, const SvrParams& p = {});

  Vec2 predict(double t) const;
  bool fitted() const { return fitted_; }

 private:
  KernelRegressor1d x_, y_;
  bool fitted_ = false;
};

}  // namespace rpf::belief
