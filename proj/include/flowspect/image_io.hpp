#pragma once

#include <filesystem>

#include "flowspect/image.hpp"

namespace flowspect {

/// Decodes an 8- or 16-bit PNG (gray, gray+alpha, RGB, RGBA, palette) or a
/// binary P6 PPM. Alpha is dropped; values are scaled to [0,1].
/// Throws IoError when the file is missing or cannot be decoded.
Image read_image(const std::filesystem::path& path);

/// Writes 8-bit gray (1 channel) or RGB (3 channels) PNG.
void write_png(const std::filesystem::path& path, const Image& image);

/// Writes binary P6 PPM; single-channel images are replicated to RGB.
void write_ppm(const std::filesystem::path& path, const Image& image);

/// Writes a 1-bit grayscale PNG; nonzero entries become white.
void write_mask_png(const std::filesystem::path& path, const MaskPlane& mask);

/// Reads a matte or mask PNG and binarizes it at 0.5. The alpha channel is
/// used when present, otherwise the channel mean.
MaskPlane read_mask_png(const std::filesystem::path& path);

}  // namespace flowspect
