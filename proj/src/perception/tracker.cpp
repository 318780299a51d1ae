#include "rpf/perception/tracker.hpp"

#include <algorithm>

namespace rpf::perception {

void TargetTracker::appendSample(double t, const Detection& det) {
  history_.push_back({t, det.position, det.velocity});
  while (!history_.empty() && history_.front().t < t - params_.historyKeep)
    history_.pop_front();
}

void TargetTracker::update(double t, const std::vector<Detection>& detections) {
  justLost_ = false;
  justReacquired_ = false;

  const Detection* target = nullptr;
  FrameObservation frame;
  frame.t = t;
  for (const auto& d : detections) {
    if (d.isTarget) {
      target = &d;
      frame.targetBox = d.bbox;
    } else {
      frame.otherBoxes.emplace_back(d.agentId, d.bbox);
    }
  }

  switch (status_) {
    case TrackStatus::kUntracked:
      if (target) {
        status_ = TrackStatus::kTracked;
        appendSample(t, *target);
      }
      break;
    case TrackStatus::kTracked:
      if (target) {
        appendSample(t, *target);
      } else {
        status_ = TrackStatus::kLost;
        justLost_ = true;
        lostTime_ = t;
        sightStreak_ = 0;
        // Decide what hid the target from the frames leading up to now.
        preLossIou_ = 0.0;
        for (const auto& f : window_) {
          if (!f.targetBox) continue;
          for (const auto& [id, box] : f.otherBoxes)
            preLossIou_ = std::max(preLossIou_, f.targetBox->iou(box));
        }
        lossKind_ = preLossIou_ > params_.classifyIouThreshold ? OcclusionKind::kDynamic
                                                               : OcclusionKind::kTopographic;
      }
      break;
    case TrackStatus::kLost:
      if (target) {
        ++sightStreak_;
        if (sightStreak_ >= params_.reacquireFrames) {
          status_ = TrackStatus::kTracked;
          justReacquired_ = true;
          appendSample(t, *target);
        }
      } else {
        sightStreak_ = 0;
      }
      break;
  }

  window_.push_back(std::move(frame));
  while (!window_.empty() && window_.front().t < t - params_.classifyWindow)
    window_.pop_front();
}

}  // namespace rpf::perception
