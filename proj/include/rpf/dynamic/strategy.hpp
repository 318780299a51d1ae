#pragma once

namespace rpf::dynamic {

enum class DynamicStrategy { kBelief, kFluidFollow, kOvertake };

struct StrategyThresholds {
  double deltaC = 10.0;     // overtake cost above this means the pass is blocked
  double deltaVMin = 1.3;   // below this the crowd is slow enough to search past
  double deltaVMax = 1.5;   // above this the crowd is too fast to overtake
};

// Branch order matters: a blocked pass with a slow crowd falls back to the
// belief search; a blocked pass or a fast crowd flows with it; otherwise pass.
inline DynamicStrategy chooseDynamicStrategy(double cStar, double minOccSpeed,
                                             double maxOccSpeed,
                                             const StrategyThresholds& th) {
  if (cStar > th.deltaC && maxOccSpeed < th.deltaVMin) return DynamicStrategy::kBelief;
  if (cStar > th.deltaC || minOccSpeed > th.deltaVMax) return DynamicStrategy::kFluidFollow;
  return DynamicStrategy::kOvertake;
}

inline const char* strategyName(DynamicStrategy s) {
  switch (s) {
    case DynamicStrategy::kBelief: return "belief";
    case DynamicStrategy::kFluidFollow: return "fluid_follow";
    case DynamicStrategy::kOvertake: return "overtake";
  }
  return "?";
}

}  // namespace rpf::dynamic
