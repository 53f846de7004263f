#pragma once

#include <optional>
#include <span>

#include "flowspect/image.hpp"

namespace flowspect {

/// Binary foreground raster (entries 0 or 1).
struct Mask {
  MaskPlane bits;

  Mask() = default;
  explicit Mask(MaskPlane b) : bits(std::move(b)) {}
  static Mask zeros(int width, int height) { return Mask(MaskPlane::Zero(height, width)); }
  static Mask ones(int width, int height) { return Mask(MaskPlane::Ones(height, width)); }

  int width() const { return static_cast<int>(bits.cols()); }
  int height() const { return static_cast<int>(bits.rows()); }
  long area() const { return bits.cast<long>().sum(); }
  bool operator==(const Mask& o) const {
    return bits.rows() == o.bits.rows() && bits.cols() == o.bits.cols() && (bits == o.bits).all();
  }
};

struct MaskBuildConfig {
  double theta_f = 0.1;
  double shrink = 0.10;
  int stride = 1;
  /// A pixel enters the composite when at least this many masks cover it.
  int min_votes = 1;
  /// Drop masks whose centroid is farther than this fraction of the side from
  /// the center; 1.0 keeps every mask.
  double center_tolerance = 1.0;

  void validate() const;
};

/// 1 where channel-mean |crop - reference| >= theta_f. Throws ShapeError.
Mask per_frame_mask(const Image& crop, const Image& reference, double theta_f);

/// Per-pixel vote count >= min_votes; min_votes = 1 is the union.
/// Throws ArgError (empty input) or ShapeError (size mismatch).
Mask composite_mask(std::span<const Mask> masks, int min_votes = 1);

/// Nearest-neighbor rescale to (round((1-f)W), round((1-f)H)), placed at
/// (floor((W-W')/2), floor((H-H')/2)) in a zero raster of the original size.
Mask shrink_and_pad(const Mask& mask, double f);

/// Keeps pixels under the mask bit-for-bit and writes `fill` elsewhere.
/// Throws ShapeError.
Image apply_mask(const Image& crop, const Mask& mask, double fill = 0.0);

/// Foreground centroid (x, y) in pixel-center coordinates.
std::optional<std::pair<double, double>> mask_centroid(const Mask& mask);

/// True when the centroid lies within `tolerance` * side of the raster center.
bool is_centered(const Mask& mask, double tolerance);

/// Resamples a mask to another size by nearest neighbor.
Mask resize_nearest(const Mask& mask, int width, int height);

}  // namespace flowspect
