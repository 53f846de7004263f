#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flowspect/geometry.hpp"
#include "flowspect/image.hpp"

namespace flowspect {

/// Square window cut around a detected product.
struct Crop {
  Image image;
  int source_frame = 0;
  BoundingBox source_box;
  int origin_x = 0;  // top-left of the window in frame coordinates; may be negative
  int origin_y = 0;
  double offset_x = 0.0;  // box center minus crop center, in pixels (|offset| <= 0.5)
  double offset_y = 0.0;
};

/// Largest 4-connected component of {channel-mean |frame - reference| >= threshold}
/// with at least `min_area` pixels. Confidence is component area / box area.
/// Throws ShapeError on dimension mismatch.
std::optional<BoundingBox> detect_blob_roi(const Image& frame, const Image& reference, double threshold, int min_area);

/// Square window of side ceil(max(w,h) * (1 + margin)) centered on the box,
/// zero-padded where it leaves the frame. Throws BoxError for a box outside the frame.
Crop realign_crop(const Frame& frame, const BoundingBox& box, double margin);

struct BoxRecord {
  int frame = 0;
  int camera = 0;
  BoundingBox box;
};

/// JSON-lines import, one object per line with keys frame, camera, x, y, w, h,
/// confidence. Blank lines are skipped. Throws ParseError with the 1-based line.
std::vector<BoxRecord> parse_bbox_records(std::string_view text);

/// One JSON-lines record, without trailing newline.
std::string format_bbox_record(const BoxRecord& record);

}  // namespace flowspect
