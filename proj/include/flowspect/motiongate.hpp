#pragma once

#include <memory>
#include <optional>

#include "flowspect/image.hpp"

namespace flowspect {

struct GateConfig {
  double threshold = 0.02;   // mean absolute difference, in (0,1)
  double band = 0.2;         // central fraction of frame width
  int settle = 2;            // consecutive qualifying frames before firing
  int refractory = 10;       // frames ignored after a trigger
  double noise_floor = 0.1;  // per-pixel differences below this do not locate motion

  /// Throws ArgError on out-of-range fields.
  void validate() const;
};

enum class GatePhase { idle, tracking, fired };

struct GateState {
  GatePhase phase = GatePhase::idle;
  int frames_in_band = 0;
  int refractory_left = 0;
  std::shared_ptr<const Image> reference;  // immutable, shared between successive states

  /// Fresh state; the reference is the empty-belt frame.
  static GateState with_reference(Image reference) {
    GateState s;
    s.reference = std::make_shared<const Image>(std::move(reference));
    return s;
  }
};

struct Trigger {
  int frame_index = 0;
  double energy = 0.0;
  double centroid_x = 0.0;
};

struct GateStep {
  GateState state;
  std::optional<Trigger> trigger;
};

/// Mean over pixels of the channel-averaged |frame - reference|.
/// Throws ShapeError on dimension mismatch.
double motion_energy(const Image& frame, const Image& reference);

/// Difference-weighted mean column of |frame - reference|, counting only
/// pixels whose difference reaches `floor`; nullopt when no pixel does.
std::optional<double> motion_centroid_x(const Image& frame, const Image& reference, double floor = 0.0);

/// Pure state transition. A frame qualifies when its motion energy reaches the
/// threshold and its motion centroid (above the noise floor) lies inside the
/// center band. The gate
/// fires on the `settle`-th consecutive qualifying frame, then ignores
/// `refractory` frames, and re-arms only after a non-qualifying frame so a
/// slow object cannot fire twice.
GateStep gate_step(const GateState& state, const Frame& frame, const GateConfig& config);

}  // namespace flowspect
