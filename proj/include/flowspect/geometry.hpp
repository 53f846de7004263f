#pragma once

#include <algorithm>
#include <string>

namespace flowspect {

/// Axis-aligned box in pixel coordinates; covers columns [x, x+w) and rows [y, y+h).
struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 1;
  int h = 1;
  double confidence = 1.0;

  double center_x() const { return x + w / 2.0; }
  double center_y() const { return y + h / 2.0; }
  long area() const { return static_cast<long>(w) * h; }

  bool fits_within(int width, int height) const {
    return x >= 0 && y >= 0 && w >= 1 && h >= 1 && x + w <= width && y + h <= height;
  }

  bool operator==(const BoundingBox& o) const { return x == o.x && y == o.y && w == o.w && h == o.h; }
};

inline double iou(const BoundingBox& a, const BoundingBox& b) {
  const int ix0 = std::max(a.x, b.x);
  const int iy0 = std::max(a.y, b.y);
  const int ix1 = std::min(a.x + a.w, b.x + b.w);
  const int iy1 = std::min(a.y + a.h, b.y + b.h);
  if (ix1 <= ix0 || iy1 <= iy0) return 0.0;
  const double inter = static_cast<double>(ix1 - ix0) * (iy1 - iy0);
  return inter / (static_cast<double>(a.area()) + static_cast<double>(b.area()) - inter);
}

inline std::string to_string(const BoundingBox& b) {
  return "(" + std::to_string(b.x) + "," + std::to_string(b.y) + "," + std::to_string(b.w) + "," + std::to_string(b.h) + ")";
}

}  // namespace flowspect
