#pragma once

#include <deque>

#include "rpf/perception/sense.hpp"

namespace rpf::perception {

enum class TrackStatus { kUntracked, kTracked, kLost };
enum class OcclusionKind { kTopographic, kDynamic };

struct TrackSample {
  double t = 0.0;
  Vec2 position = Vec2::Zero();
  Vec2 velocity = Vec2::Zero();
};

struct TrackerParams {
  int reacquireFrames = 6;  // more than 5 consecutive sightings to re-identify
  double historyKeep = 8.0;
  double classifyWindow = 1.0;        // seconds of frames inspected before a loss
  double classifyIouThreshold = 0.3;  // box overlap that marks a loss as person-caused
};

// Target track with loss/re-identification hysteresis. History only grows
// while the target is tracked; a lost target must be sighted in enough
// consecutive frames before the track resumes.
class TargetTracker {
 public:
  explicit TargetTracker(const TrackerParams& p = {}) : params_(p) {}

  void update(double t, const std::vector<Detection>& detections);

  TrackStatus status() const { return status_; }
  bool justLost() const { return justLost_; }
  bool justReacquired() const { return justReacquired_; }

  const std::deque<TrackSample>& history() const { return history_; }
  double lostTime() const { return lostTime_; }
  const TrackSample& lastSample() const { return history_.back(); }

  // Classification of the loss in progress: person-caused when some box
  // overlapped the target's beyond the threshold shortly before the loss.
  OcclusionKind lossKind() const { return lossKind_; }
  double preLossIou() const { return preLossIou_; }

 private:
  TrackerParams params_;
  TrackStatus status_ = TrackStatus::kUntracked;
  std::deque<TrackSample> history_;
  std::deque<FrameObservation> window_;
  int sightStreak_ = 0;
  double lostTime_ = 0.0;
  bool justLost_ = false;
  bool justReacquired_ = false;
  OcclusionKind lossKind_ = OcclusionKind::kTopographic;
  double preLossIou_ = 0.0;

  void appendSample(double t, const Detection& det);
};

}  // namespace rpf::perception
