#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flowspect/geometry.hpp"
#include "flowspect/image.hpp"

namespace flowspect {

enum class Label { good, defective };

std::string_view to_string(Label label);
/// Accepts "good" / "defective"; throws ArgError otherwise.
Label parse_label(std::string_view text);

struct DatasetItem {
  std::string path;  // file path, or a synthetic id
  Label label = Label::good;
  int camera = 0;
  int frame = 0;
};

struct DatasetIndex {
  std::vector<DatasetItem> items;

  std::size_t size() const { return items.size(); }
  std::size_t count(Label label) const;
};

struct SplitSpec {
  std::size_t n_train = 0;
  std::size_t n_val = 0;
  std::size_t n_test = 0;
  std::uint64_t seed = 0;
};

struct DatasetSplit {
  DatasetIndex train;
  DatasetIndex val;
  DatasetIndex test;
};

/// Indexes `root/{good,defective}/camera<k>/<frame>.{png,ppm}`. Every image is
/// decoded once to reject corrupt files. Sorted by (label, camera, frame).
///
/// Throws NotFound (missing root), ItemError (undecodable image or bad name),
/// EmptyDataset (no images).
DatasetIndex scan_dataset(const std::filesystem::path& root);

/// Seeded shuffle then prefix-take. Train takes the first `n_train` good items;
/// validation and test are filled from the remainder with the defective share
/// of the remainder (at least one of each label when the split is nonempty).
/// Throws SplitError stating the shortfall.
DatasetSplit split_dataset(const DatasetIndex& index, const SplitSpec& spec);

void write_index(const std::filesystem::path& path, const DatasetIndex& index);
DatasetIndex read_index(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Synthetic conveyor scenes

enum class ProductShape { rectangle, trapezoid };

/// Circular contrast change centered at an offset from the product center.
struct Blotch {
  double offset_x = 0.0;
  double offset_y = 0.0;
  double radius = 3.0;
  double contrast = 0.4;
};

/// Distractor rectangles, redrawn per seed. Belt patches replace the belt
/// albedo (overlaps do not stack); surface patches add to the product albedo.
struct Clutter {
  int count = 0;
  double amplitude = 0.1;  // |albedo change|, sign drawn per patch
  int min_size = 3;
  int max_size = 12;
};

struct SyntheticSceneSpec {
  int width = 128;
  int height = 96;
  ProductShape shape = ProductShape::rectangle;
  int product_width = 32;
  int product_height = 40;
  /// Row of the product's top edge; negative centers it vertically.
  int product_top = -1;
  double product_albedo = 0.7;
  double belt_albedo = 0.2;
  double noise = 0.0;
  double speed = 4.0;
  /// Left edge of the product in frame 0.
  double start_x = -32.0;
  std::optional<Blotch> defect;
  Clutter clutter;
  /// Patches in product coordinates: they travel with the product and are
  /// covered by its silhouette.
  Clutter surface{0, 0.05, 2, 8};
};

struct FrameTruth {
  std::optional<BoundingBox> box;  // empty while the product is off-screen
  Label label = Label::good;
};

struct SyntheticSequence {
  std::vector<Frame> frames;
  std::vector<FrameTruth> truth;
};

/// Throws SpecError when the spec is invalid (e.g. product larger than frame).
void validate(const SyntheticSceneSpec& spec);

/// Product translating left to right at `spec.speed` px/frame over a belt, with
/// additive Uniform(-noise, noise) per pixel clamped to [0,1].
SyntheticSequence generate_synthetic_sequence(const SyntheticSceneSpec& spec, int n_frames, std::uint64_t seed);

/// Empty belt (clutter excluded) with its own noise draw.
Image render_background(const SyntheticSceneSpec& spec, std::uint64_t seed);

/// Silhouette of the product with its left edge at `left`, as a frame-sized 0/1 plane.
MaskPlane render_silhouette(const SyntheticSceneSpec& spec, int left);

}  // namespace flowspect
