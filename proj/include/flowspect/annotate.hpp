#pragma once

#include <array>
#include <string>

#include "flowspect/dataset.hpp"
#include "flowspect/geometry.hpp"
#include "flowspect/image.hpp"

namespace flowspect {

using Color = std::array<double, 3>;

struct AnnotationStyle {
  Color good{0.0, 1.0, 0.0};
  Color defective{1.0, 0.0, 0.0};
  Color text{1.0, 1.0, 1.0};
  Color text_background{0.0, 0.0, 0.0};
  int thickness = 2;
};

/// "GOOD 12.34" / "DEFECTIVE 12.34".
std::string annotation_text(Label label, double score);

/// Pixel rectangle covered by the text block for `text` anchored at the
/// top-left of `box`, clamped to a width x height frame.
BoundingBox text_block_rect(int width, int height, const BoundingBox& box, const std::string& text);

/// Returns an RGB copy of the frame (grey frames are replicated to three
/// channels) with the box perimeter drawn in the label color and the label
/// and score written in a text block at the box's top-left corner.
/// Throws BoxError unless the box lies within the frame.
Frame annotate_frame(const Frame& frame, const BoundingBox& box, Label label, double score,
                     const AnnotationStyle& style = {});

}  // namespace flowspect
