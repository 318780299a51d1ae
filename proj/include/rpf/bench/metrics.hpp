#pragma once

#include <vector>

#include "rpf/bench/episode_record.hpp"

namespace rpf::bench {

struct Aggregate {
  int count = 0;
  int successes = 0;
  double sr = 0.0;     // percent
  double spl = 0.0;    // percent, never above sr
  double edtot = 0.0;  // meters, mean of per-episode means
};

// Per-episode success-weighted path efficiency in [0, 1]: S * l / max(p, l).
// A refind with no meaningful travel counts as a perfect path.
double splTerm(const EpisodeRecord& r);

Aggregate aggregate(const std::vector<EpisodeRecord>& records);

}  // namespace rpf::bench
