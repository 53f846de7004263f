#pragma once

#include <filesystem>
#include <optional>

#include "flowspect/flow.hpp"

namespace flowspect {

// File layout, version 1:
//   8 bytes   magic "FSFLOW01"
//   u64 (LE)  length of the JSON header
//   header    JSON: version, dim, hidden, clamp, permutations, threshold,
//             metadata, parameter_count
//   payload   little-endian f64: standardization mean, standardization scale,
//             then per block the scale subnet (w1, b1, w2, b2) and the shift
//             subnet, each matrix column-major.
inline constexpr int kModelFormatVersion = 1;

void save_model(const std::filesystem::path& path, const FlowModel& model);

/// Throws NotFound for a missing file, IoError for a malformed one and
/// ShapeError when `expected_dim` is given and differs from the stored one.
FlowModel load_model(const std::filesystem::path& path, std::optional<int> expected_dim = std::nullopt);

}  // namespace flowspect
