#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "flowspect/flow.hpp"
#include "flowspect/mask.hpp"
#include "flowspect/motiongate.hpp"

namespace flowspect {

/// What the model sees: the whole frame, the realigned product crop, or the
/// crop with the composite mask applied.
enum class InputMode { original, cropped, masked };

std::string_view to_string(InputMode mode);

struct RoiConfig {
  int min_area = 50;
  double margin = 0.1;
  /// Pixel difference threshold; negative means "use gate.threshold".
  double threshold = -1.0;
  /// Optional JSON-lines box file that replaces detection for matching (frame, camera).
  std::string boxes;
};

struct AugmentConfig {
  bool enabled = true;
  double lo = 0.5;
  double hi = 1.5;
};

struct FlowConfig {
  int blocks = 8;
  int hidden = 0;  // 0: min(2d, 512)
  double clamp = 3.0;
  double learning_rate = 2e-4;
  double weight_decay = 1e-5;
  double grad_clip = 10.0;
  int batch = 32;
  int meta_epochs = 10;
  int sub_epochs = 8;
  bool validate_every_sub_epoch = false;
  int score_transforms = 4;
};

/// Parameters of the synthetic corpus written by the `synth` command.
struct SynthConfig {
  int n_good = 200;
  int n_defective = 50;
  int n_products = 4;  // demo streams written for `run`
  int frame_width = 128;
  int frame_height = 96;
  std::string shape = "trapezoid";
  int product_width = 36;
  int product_height = 48;
  int size_jitter = 2;      // +- pixels on both extents
  double product_albedo = 0.6;
  double albedo_jitter = 0.0;  // +- per product
  double belt_albedo = 0.15;
  double noise = 0.02;
  double speed = 6.0;
  double defect_radius = 4.0;
  double defect_contrast = 0.3;
  int clutter = 0;
  double clutter_amplitude = 0.12;
  int surface = 0;  // patches on the product itself
  double surface_amplitude = 0.05;
};

struct PipelineConfig {
  std::string dataset_root = "data";
  std::size_t n_train = 150;
  std::size_t n_val = 60;
  std::size_t n_test = 40;
  std::uint64_t seed = 7;
  int n_cameras = 1;
  std::string output = "out";
  std::string streams = "streams";
  std::string features_import;
  std::string mask_import;
  InputMode input = InputMode::masked;
  double fill = 0.0;
  double target_tpr = 0.85;
  GateConfig gate;
  RoiConfig roi;
  MaskBuildConfig mask;
  AugmentConfig augment;
  FlowConfig flow;
  SynthConfig synth;

  double roi_threshold() const { return roi.threshold >= 0.0 ? roi.threshold : gate.threshold; }
  TrainSchedule schedule() const;
};

/// Parses "key = value" lines with '#' comments. Missing keys keep their
/// defaults. Throws ConfigError naming the key on unknown keys, unparsable
/// values or out-of-range values.
PipelineConfig parse_config(std::string_view text);

/// Every key with its resolved value, one "key = value" line each, sorted by key.
std::string to_text(const PipelineConfig& config);

/// FNV-1a 64 of to_text(config), as 16 hex digits.
std::string config_hash(const PipelineConfig& config);

}  // namespace flowspect
