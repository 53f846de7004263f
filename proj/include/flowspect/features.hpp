#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "flowspect/image.hpp"
#include "flowspect/random.hpp"

namespace flowspect {

/// Side length of the square model input.
inline constexpr int kModelInputSize = 448;

/// Pooling grids of the default extractor (cells per side).
inline constexpr int kFeatureGrids[] = {4, 8, 16};

struct PhotometricFactors {
  double brightness = 1.0;
  double contrast = 1.0;
  double saturation = 1.0;

  bool is_identity() const { return brightness == 1.0 && contrast == 1.0 && saturation == 1.0; }
};

enum class FeatureProvenance { default_extractor, imported };

struct FeatureVector {
  Eigen::VectorXd values;
  FeatureProvenance provenance = FeatureProvenance::default_extractor;

  Eigen::Index size() const { return values.size(); }
};

struct NamedFeatureVector {
  std::string id;
  FeatureVector features;
};

/// Bilinear resampling with pixel-center alignment. Equal sizes return the
/// input unchanged and constant images stay exactly constant.
Image resize_bilinear(const Image& image, int width, int height);

/// Bilinear resize to 448x448. Throws ShapeError on an empty image.
Image resize_to_model(const Image& image);

/// Three independent draws from Uniform[lo, hi]. Throws ArgError if lo > hi.
PhotometricFactors sample_factors(Rng& rng, double lo, double hi);

/// brightness (p <- b*p), then contrast around the image mean, then per-pixel
/// saturation toward the channel-mean gray, then one final clamp to [0,1].
/// Factors equal to 1 skip their step, so the identity triple is exact.
Image photometric(const Image& image, const PhotometricFactors& factors);

/// Feature length of the default extractor for `channels` channels:
/// (16 + 64 + 256) cells * 2 statistics * channels.
int feature_dimension(int channels);

/// Per-cell channel mean and population standard deviation on 4x4, 8x8 and
/// 16x16 grids, concatenated grid by grid; each cell contributes, per
/// channel, the pair (mean, std). Throws ShapeError unless 448x448.
FeatureVector extract_features(const Image& image);

/// CSV lines "id,v1,...,vd". The dimension comes from the first line; blank
/// lines are skipped. Throws ParseError on ragged or non-finite rows.
std::vector<NamedFeatureVector> load_precomputed(std::string_view text);

/// One CSV line (without newline), values printed round-trip exact.
std::string format_feature_line(const std::string& id, const Eigen::VectorXd& values);

}  // namespace flowspect
