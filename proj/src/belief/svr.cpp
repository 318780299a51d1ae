#include "rpf/belief/svr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rpf::belief {

void KernelRegressor1d::fit(const std::vector<double>& t, const std::vector<double>& y,
                            const SvrParams& p) {
  const int n = static_cast<int>(t.size());
  t0_ = t.front();
  const double span = t.back() - t.front();
  bandwidth_ = std::max(span / p.bandwidthDivisor, 1e-3);

  // Least-squares line through the samples.
  double sw = n, st = 0, sy = 0, stt = 0, sty = 0;
  for (int i = 0; i < n; ++i) {
    const double ti = t[i] - t0_;
    st += ti;
    sy += y[i];
    stt += ti * ti;
    sty += ti * y[i];
  }
  const double det = sw * stt - st * st;
  if (std::abs(det) > 1e-12) {
    intercept_ = (stt * sy - st * sty) / det;
    slope_ = (sw * sty - st * sy) / det;
  } else {
    intercept_ = sy / sw;
    slope_ = 0.0;
  }

  supportT_.resize(n);
  std::vector<double> resid(n);
  double maxResid = 0.0;
  for (int i = 0; i < n; ++i) {
    supportT_[i] = t[i] - t0_;
    resid[i] = y[i] - (intercept_ + slope_ * supportT_[i]);
    maxResid = std::max(maxResid, std::abs(resid[i]));
  }
  beta_.assign(n, 0.0);
  if (maxResid <= p.epsilon) return;  // everything already inside the tube

  // Gram matrix with the +1 bias fold.
  Eigen::MatrixXd K(n, n);
  const double inv2h2 = 1.0 / (2.0 * bandwidth_ * bandwidth_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double d = supportT_[i] - supportT_[j];
      const double k = std::exp(-d * d * inv2h2) + 1.0;
      K(i, j) = k;
      K(j, i) = k;
    }

  // Dual coordinate descent on beta_i = alpha_i - alpha_i^*.
  std::vector<double> g(n);  // g_i = sum_j K_ij beta_j - resid_i
  for (int i = 0; i < n; ++i) g[i] = -resid[i];
  for (int pass = 0; pass < p.maxPasses; ++pass) {
    double maxDelta = 0.0;
    for (int i = 0; i < n; ++i) {
      const double old = beta_[i];
      const double gi = g[i] - K(i, i) * old;
      double next = 0.0;
      if (-gi > p.epsilon) next = (-gi - p.epsilon) / K(i, i);
      else if (-gi < -p.epsilon) next = (-gi + p.epsilon) / K(i, i);
      next = std::clamp(next, -p.c, p.c);
      const double delta = next - old;
      if (delta != 0.0) {
        beta_[i] = next;
        for (int j = 0; j < n; ++j) g[j] += K(j, i) * delta;
        maxDelta = std::max(maxDelta, std::abs(delta));
      }
    }
    if (maxDelta < p.tolerance) break;
  }
}

double KernelRegressor1d::predict(double t) const {
  const double tau = t - t0_;
  double v = intercept_ + slope_ * tau;
  const double inv2h2 = 1.0 / (2.0 * bandwidth_ * bandwidth_);
  for (size_t i = 0; i < supportT_.size(); ++i) {
    if (beta_[i] == 0.0) continue;
    const double d = tau - supportT_[i];
    v += beta_[i] * (std::exp(-d * d * inv2h2) + 1.0);
  }
  return v;
}

void TrajectoryPredictor::fit(const std::deque<perception::TrackSample>& history,
                              const SvrParams& p) {
  std::vector<double> t, x, y;
  if (!history.empty()) {
    const double cutoff = history.back().t - p.trainWindow;
    for (const auto& s : history) {
      if (s.t < cutoff - 1e-9) continue;
      t.push_back(s.t);
      x.push_back(s.position.x());
      y.push_back(s.position.y());
    }
  }
  if (static_cast<int>(t.size()) < p.minSamples || t.back() - t.front() < p.minSpan)
    throw std::invalid_argument("insufficient history");
  x_.fit(t, x, p);
  y_.fit(t, y, p);
  fitted_ = true;
}

Vec2 TrajectoryPredictor::predict(double t) const {
  return Vec2(x_.predict(t), y_.predict(t));
}

}  // namespace rpf::belief
