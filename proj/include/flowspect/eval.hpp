#pragma once

#include <span>
#include <string>
#include <vector>

#include "flowspect/dataset.hpp"

namespace flowspect {

// Defective is the positive class everywhere in this module: an item is
// flagged defective when its score is >= the threshold.

struct ScoredItem {
  std::string id;
  int camera = 0;
  double score = 0.0;
  Label label = Label::good;
};

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  double threshold = 0.0;  // classify defective iff score >= threshold
};

struct AnomalyThreshold {
  double value = 0.0;
  double tpr = 0.0;
  double fpr = 0.0;
  double target_tpr = 0.0;
};

struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
};

struct EvalReport {
  std::vector<RocPoint> roc;
  double auroc = 0.0;
  AnomalyThreshold threshold;
  double accuracy = 0.0;
  Confusion confusion;
};

/// Threshold sweep from a sentinel just above the largest score down through
/// every distinct score. Starts at (0,0), ends at (1,1); tied scores share one
/// point. Throws DegenerateError unless both labels are present.
std::vector<RocPoint> roc_points(std::span<const ScoredItem> items);

/// Trapezoidal area under roc_points.
double auroc(std::span<const ScoredItem> items);

/// Minimal-FPR candidate among those with TPR >= target_tpr; FPR ties go to the
/// largest threshold. Throws DegenerateError or ArgError (target outside (0,1]).
AnomalyThreshold select_threshold(std::span<const ScoredItem> items, double target_tpr);

/// good iff score < threshold.
Label classify(double score, double threshold);

/// Fraction of equal entries. Throws ArgError on empty or mismatched inputs.
double accuracy(std::span<const Label> predictions, std::span<const Label> labels);

/// defective iff any camera says defective. Throws ArgError when empty.
Label aggregate_cameras(std::span<const Label> decisions);

Confusion confusion_counts(std::span<const ScoredItem> items, double threshold);

/// ROC, AUROC, accuracy and confusion of `items` at a given threshold.
EvalReport evaluate(std::span<const ScoredItem> items, const AnomalyThreshold& threshold);

/// "fpr,tpr,threshold" CSV with header.
std::string roc_csv(std::span<const RocPoint> points);

/// JSON object with auroc, threshold, tpr, fpr, target_tpr, accuracy, confusion.
std::string report_json(const EvalReport& report);

/// One JSON-lines record per item: id, camera, score, label.
std::string scores_jsonl(std::span<const ScoredItem> items);

}  // namespace flowspect
