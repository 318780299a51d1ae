#pragma once

#include <optional>

#include "rpf/geometry.hpp"

namespace rpf::perception {

struct BBox {
  double u0 = 0, v0 = 0, u1 = 0, v1 = 0;

  double width() const { return std::max(0.0, u1 - u0); }
  double height() const { return std::max(0.0, v1 - v0); }
  double area() const { return width() * height(); }

  double intersectionArea(const BBox& o) const {
    const double w = std::min(u1, o.u1) - std::max(u0, o.u0);
    const double h = std::min(v1, o.v1) - std::max(v0, o.v0);
    return (w > 0 && h > 0) ? w * h : 0.0;
  }
  double iou(const BBox& o) const {
    const double inter = intersectionArea(o);
    const double uni = area() + o.area() - inter;
    return uni > 0 ? inter / uni : 0.0;
  }
  // Fraction of this box hidden behind o.
  double coverageBy(const BBox& o) const {
    const double a = area();
    return a > 0 ? intersectionArea(o) / a : 0.0;
  }
};

struct CameraParams {
  double fov = 2.0943951023931953;  // 120 degrees
  double minRange = 0.03;
  double maxRange = 10.0;
  int imageWidth = 640;
  int imageHeight = 480;
  double mountHeight = 0.85;  // mid-height of a person, keeps boxes vertically centered
  double personHeight = 1.7;
  double personRadius = 0.3;

  double focal() const { return (imageWidth / 2.0) / std::tan(fov / 2.0); }
};

// Pinhole projection of a person (vertical cylinder) seen from a camera at
// `camPos` looking along `camHeading`. Empty when out of range or outside the
// field of view; the box is clamped to the image.
std::optional<BBox> projectPerson(const CameraParams& cam, const Vec2& camPos,
                                  double camHeading, const Vec2& personPos);

bool inFieldOfView(const CameraParams& cam, const Vec2& camPos, double camHeading,
                   const Vec2& personPos);

}  // namespace rpf::perception
