#include "rpf/perception/camera.hpp"

#include <cmath>

namespace rpf::perception {

bool inFieldOfView(const CameraParams& cam, const Vec2& camPos, double camHeading,
                   const Vec2& personPos) {
  const Vec2 rel = personPos - camPos;
  const double range = rel.norm();
  if (range < cam.minRange || range > cam.maxRange) return false;
  const double bearing = wrapAngle(std::atan2(rel.y(), rel.x()) - camHeading);
  return std::abs(bearing) <= cam.fov / 2.0;
}

std::optional<BBox> projectPerson(const CameraParams& cam, const Vec2& camPos,
                                  double camHeading, const Vec2& personPos) {
  if (!inFieldOfView(cam, camPos, camHeading, personPos)) return std::nullopt;
  const Vec2 rel = personPos - camPos;
  const Mat2 toCam = rotation2d(-camHeading);
  const Vec2 c = toCam * rel;  // x forward, y left
  const double forward = c.x();
  if (forward < 1e-6) return std::nullopt;

  const double f = cam.focal();
  const double cu = cam.imageWidth / 2.0;
  const double cv = cam.imageHeight / 2.0;
  const double uCenter = cu + f * (-c.y() / forward);
  const double halfW = f * cam.personRadius / forward;

  BBox b;
  b.u0 = std::clamp(uCenter - halfW, 0.0, static_cast<double>(cam.imageWidth));
  b.u1 = std::clamp(uCenter + halfW, 0.0, static_cast<double>(cam.imageWidth));
  b.v0 = std::clamp(cv - f * (cam.personHeight - cam.mountHeight) / forward, 0.0,
                    static_cast<double>(cam.imageHeight));
  b.v1 = std::clamp(cv + f * cam.mountHeight / forward, 0.0,
                    static_cast<double>(cam.imageHeight));
  if (b.area() <= 0) return std::nullopt;
  return b;
}

}  // namespace rpf::perception
