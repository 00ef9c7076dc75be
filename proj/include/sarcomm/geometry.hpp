// geometry.hpp -- shared flat-earth acquisition geometry.
//
// The platform flies along +x at constant velocity and altitude, crossing
// x = 0 at the pass centre time t = 0. The scene centre sits at ground
// coordinates (0, 0); a target at (x, y) lies y metres down-range of it.
#pragma once

#include <cmath>

#include "sarcomm/link_budget.hpp"

namespace sarcomm {

struct SlantGeometry {
  double height_m = 0;         // platform altitude H = R cos(theta_i)
  double ground_offset_m = 0;  // nadir-track to scene centre, Y = R sin(theta_i)

  // Slant range at closest approach for a ground-range offset y.
  double r0(double y_m) const {
    const double gy = ground_offset_m + y_m;
    return std::sqrt(height_m * height_m + gy * gy);
  }

  // Instantaneous slant range from platform position (px, 0, H) to (x, y, 0).
  double slant_range(double platform_x_m, double x_m, double y_m) const {
    const double r0v = r0(y_m);
    const double dx = platform_x_m - x_m;
    return std::sqrt(r0v * r0v + dx * dx);
  }
};

inline SlantGeometry slant_geometry(const ImagingGeometry& geom) {
  return {geom.slant_range_m * std::cos(geom.incidence_angle_rad),
          geom.slant_range_m * std::sin(geom.incidence_angle_rad)};
}

}  // namespace sarcomm
