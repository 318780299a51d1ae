#include "rpf/dynamic/korobov.hpp"

namespace rpf::dynamic {

std::vector<Vec2> korobovUnitPoints(int n, int a) {
  std::vector<Vec2> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i)
    pts.emplace_back(static_cast<double>(i) / n,
                     static_cast<double>((static_cast<long long>(i) * a) % n) / n);
  return pts;
}

std::vector<Vec2> korobovCandidates(const Vec2& pos, double heading, const KorobovParams& p) {
  const Mat2 rot = rotation2d(heading);
  std::vector<Vec2> out;
  out.reserve(p.n);
  for (const auto& u : korobovUnitPoints(p.n, p.a)) {
    const Vec2 local(u.x() * p.depth, (u.y() - 0.5) * p.width);
    out.push_back(pos + rot * local);
  }
  return out;
}

}  // namespace rpf::dynamic
