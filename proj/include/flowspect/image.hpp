#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "flowspect/errors.hpp"

namespace flowspect {

/// One image channel, row-major so that `(row, col)` = `(y, x)` walks memory
/// in scanline order.
template <typename Scalar>
using PlaneT = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Plane = PlaneT<double>;
using MaskPlane = PlaneT<std::uint8_t>;

/// Planar raster. All channels share one size; pixel values of the double
/// instantiation are kept in [0,1].
template <typename Scalar>
struct BasicImage {
  std::vector<PlaneT<Scalar>> channels;

  BasicImage() = default;
  BasicImage(int width, int height, int n_channels, Scalar fill = Scalar(0))
      : channels(static_cast<std::size_t>(n_channels), PlaneT<Scalar>::Constant(height, width, fill)) {}

  int width() const { return channels.empty() ? 0 : static_cast<int>(channels.front().cols()); }
  int height() const { return channels.empty() ? 0 : static_cast<int>(channels.front().rows()); }
  int n_channels() const { return static_cast<int>(channels.size()); }
  bool empty() const { return channels.empty() || width() == 0 || height() == 0; }

  Scalar& at(int c, int y, int x) { return channels[static_cast<std::size_t>(c)](y, x); }
  Scalar at(int c, int y, int x) const { return channels[static_cast<std::size_t>(c)](y, x); }

  bool operator==(const BasicImage& other) const {
    if (channels.size() != other.channels.size()) return false;
    for (std::size_t c = 0; c < channels.size(); ++c) {
      if (channels[c].rows() != other.channels[c].rows() || channels[c].cols() != other.channels[c].cols()) return false;
      if (!(channels[c] == other.channels[c]).all()) return false;
    }
    return true;
  }
};

using Image = BasicImage<double>;

/// A raster plus where it came from.
struct Frame {
  Image image;
  int camera = 0;
  int index = 0;
};

template <typename A, typename B>
bool same_size(const BasicImage<A>& a, const BasicImage<B>& b) {
  return a.width() == b.width() && a.height() == b.height();
}

/// Throws ShapeError unless both images have equal width, height and channel count.
void require_same_shape(const Image& a, const Image& b, const std::string& context);

/// Per-pixel mean over channels.
Plane channel_mean(const Image& image);

/// Per-pixel |a - b|, averaged over channels.
Plane channel_mean_abs_diff(const Image& a, const Image& b);

/// Copies the window [x0, x0+w) x [y0, y0+h); pixels outside `image` are `fill`.
Image extract_window(const Image& image, int x0, int y0, int w, int h, double fill = 0.0);

/// Clamps every channel into [0,1].
void clamp_unit(Image& image);

}  // namespace flowspect
