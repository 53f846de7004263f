#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "flowspect/eval.hpp"
#include "flowspect/features.hpp"

namespace flowspect {

/// One-hidden-layer perceptron: out = W2 * relu(W1 * in + b1) + b2.
struct Subnet {
  Eigen::MatrixXd w1;
  Eigen::VectorXd b1;
  Eigen::MatrixXd w2;
  Eigen::VectorXd b2;
};

/// Trainable parameters of one affine coupling block.
struct CouplingParameters {
  Subnet scale;
  Subnet shift;
};

/// All trainable parameters. Also used as the gradient and optimizer-moment
/// container, since it has exactly the parameter shapes.
struct FlowParameters {
  std::vector<CouplingParameters> blocks;

  /// Same shapes, all zeros.
  FlowParameters zeros_like() const;
  std::size_t count() const;
  double squared_norm() const;

  /// Calls fn(Eigen::Map<Eigen::VectorXd>) on every parameter tensor in a fixed order.
  template <typename Fn>
  void for_each_tensor(Fn&& fn);
  template <typename Fn>
  void for_each_tensor(Fn&& fn) const;
};

/// Per-dimension affine normalization applied before the flow.
struct Standardization {
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;  // divided by; strictly positive

  bool empty() const { return mean.size() == 0; }
};

/// Column statistics of a d x N feature matrix; the scale is sqrt(var + eps).
Standardization fit_standardization(const Eigen::MatrixXd& features, double eps = 1e-6);

struct FlowModel {
  int dim = 0;
  int hidden = 0;
  double clamp = 3.0;
  /// block k reads its input at indices permutations[k] (out[i] = in[perm[i]]).
  std::vector<std::vector<int>> permutations;
  FlowParameters params;
  Standardization standardization;
  std::optional<AnomalyThreshold> threshold;
  /// Free-form provenance persisted with the model.
  std::map<std::string, std::string> metadata;

  int n_blocks() const { return static_cast<int>(permutations.size()); }
  /// Number of conditioning coordinates, ceil(d/2).
  int split() const { return (dim + 1) / 2; }
};

struct FlowArchitecture {
  int dim = 0;
  int n_blocks = 8;
  int hidden = 0;  // 0 selects min(2d, 512)
  double clamp = 3.0;
};

int default_hidden_width(int dim);

/// Seeded small first-layer weights, zero output layers (the flow starts as a
/// pure permutation), seeded permutations. Throws ArgError on invalid sizes.
FlowModel init_flow(const FlowArchitecture& arch, std::uint64_t seed);

struct FlowOutput {
  Eigen::MatrixXd z;       // d x N
  Eigen::VectorXd logdet;  // N
};

/// Batched forward map; columns are samples. Throws NumError on non-finite
/// input, ShapeError on a dimension mismatch.
FlowOutput forward(const FlowModel& model, const Eigen::MatrixXd& y);

/// Exact algebraic inverse of forward.
Eigen::MatrixXd inverse(const FlowModel& model, const Eigen::MatrixXd& z);

/// log N(z; 0, I) + logdet per column.
Eigen::VectorXd log_likelihood(const FlowModel& model, const Eigen::MatrixXd& y);
double log_likelihood(const FlowModel& model, const Eigen::VectorXd& y);

/// (y - mean) / scale column-wise; identity if the model has no standardization.
Eigen::MatrixXd standardize(const FlowModel& model, const Eigen::MatrixXd& raw);

/// Mean negative log-likelihood over the columns of `y` and its gradient with
/// respect to every parameter.
struct LossAndGradient {
  double loss = 0.0;
  FlowParameters gradient;
};
LossAndGradient nll_gradient(const FlowModel& model, const Eigen::MatrixXd& y);

// ---------------------------------------------------------------------------
// Training

struct TrainSchedule {
  int meta_epochs = 10;
  int sub_epochs = 8;
  int batch_size = 32;
  double learning_rate = 2e-4;
  double weight_decay = 1e-5;
  double grad_clip = 10.0;
  std::uint64_t seed = 0;
  double target_tpr = 0.85;
  bool validate_every_sub_epoch = false;

  void validate() const;
};

/// Raw (unstandardized) training features, d x N, good items only.
struct TrainingSet {
  Eigen::MatrixXd features;
  /// Optional: features for one sub-epoch recomputed under fresh photometric
  /// augmentation. Must return d x N in the same column order.
  std::function<Eigen::MatrixXd(Rng&)> augmented_pass;
};

struct ValidationSet {
  std::vector<Label> labels;
  /// Anomaly score per validation item under the current model.
  std::function<std::vector<double>(const FlowModel&)> score;
};

struct HistoryEntry {
  int meta_epoch = 0;  // 1-based
  int sub_epoch = 0;   // 1-based; equals sub_epochs for meta-epoch checkpoints
  double train_loss = 0.0;  // mean NLL over the unaugmented training features
  double val_auroc = 0.0;
  AnomalyThreshold threshold;
};

struct TrainResult {
  FlowModel model;
  std::vector<HistoryEntry> history;
  int passes = 0;
};

/// Adam on mean NLL with global-norm clipping; validation, AUROC and the
/// TPR-targeted threshold after every meta epoch (or sub epoch). The stored
/// threshold is the one from the final checkpoint. If the model carries no
/// standardization, it is fit on `training.features`.
/// Throws ArgError (empty or mismatched inputs) or TrainError (non-finite loss).
TrainResult train_flow(FlowModel model, const TrainingSet& training, const ValidationSet& validation,
                       const TrainSchedule& schedule);

// ---------------------------------------------------------------------------
// Scoring

struct ScoreOptions {
  int n_transforms = 4;
  double interval_lo = 0.5;
  double interval_hi = 1.5;
  std::uint64_t seed = 0;
};

struct AnomalyScore {
  double value = 0.0;
  int n_transforms = 0;
};

/// The transformation list used by anomaly_score: the identity first, then
/// n_transforms - 1 draws from sample_factors seeded by `options.seed`.
std::vector<PhotometricFactors> scoring_transforms(const ScoreOptions& options);

/// Mean negative log-likelihood of the columns of `raw` (d x T: one item's
/// features under T transformations), after standardization.
double score_features(const FlowModel& model, const Eigen::MatrixXd& raw);

/// Mean over scoring_transforms of -log_likelihood(standardize(extract(photometric(image)))).
/// `image` must be a 448x448 model input.
AnomalyScore anomaly_score(const FlowModel& model, const Image& image, const ScoreOptions& options);

// ---------------------------------------------------------------------------

template <typename Fn>
void FlowParameters::for_each_tensor(Fn&& fn) {
  auto visit = [&fn](auto& tensor) { fn(Eigen::Map<Eigen::VectorXd>(tensor.data(), tensor.size())); };
  for (auto& block : blocks) {
    for (Subnet* net : {&block.scale, &block.shift}) {
      visit(net->w1);
      visit(net->b1);
      visit(net->w2);
      visit(net->b2);
    }
  }
}

template <typename Fn>
void FlowParameters::for_each_tensor(Fn&& fn) const {
  auto visit = [&fn](const auto& tensor) {
    fn(Eigen::Map<const Eigen::VectorXd>(tensor.data(), tensor.size()));
  };
  for (const auto& block : blocks) {
    for (const Subnet* net : {&block.scale, &block.shift}) {
      visit(net->w1);
      visit(net->b1);
      visit(net->w2);
      visit(net->b2);
    }
  }
}

}  // namespace flowspect
