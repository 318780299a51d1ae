#include "rpf/bench/metrics.hpp"

#include <algorithm>

namespace rpf::bench {

double splTerm(const EpisodeRecord& r) {
  if (!r.success) return 0.0;
  const double denom = std::max(r.pathLength, r.shortestLength);
  if (denom < 1e-9) return 1.0;
  return r.shortestLength / denom;
}

Aggregate aggregate(const std::vector<EpisodeRecord>& records) {
  Aggregate a;
  a.count = static_cast<int>(records.size());
  if (records.empty()) return a;
  double splSum = 0.0, edtotSum = 0.0;
  for (const auto& r : records) {
    if (r.success) ++a.successes;
    splSum += splTerm(r);
    edtotSum += r.edtotMean;
  }
  a.sr = 100.0 * a.successes / a.count;
  a.spl = 100.0 * splSum / a.count;
  a.edtot = edtotSum / a.count;
  return a;
}

}  // namespace rpf::bench
