#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flowspect/config.hpp"
#include "flowspect/dataset.hpp"
#include "flowspect/eval.hpp"

namespace flowspect {

enum class Command { synth, scan, mask_build, train, eval, run };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command command);

/// Reads and parses a config file, then rebases every relative path key on
/// the file's directory. Throws ConfigError (key "config") if unreadable.
PipelineConfig load_config(const std::filesystem::path& path);

/// Artifact locations under the output directory.
struct OutputLayout {
  std::filesystem::path root;

  std::filesystem::path index() const { return root / "index.json"; }
  std::filesystem::path split(std::string_view part) const {
    return root / ("split_" + std::string(part) + ".json");
  }
  std::filesystem::path mask(int camera) const { return root / "masks" / ("camera" + std::to_string(camera) + ".png"); }
  std::filesystem::path model() const { return root / "model.bin"; }
  std::filesystem::path history() const { return root / "history.csv"; }
  std::filesystem::path report() const { return root / "eval" / "report.json"; }
  std::filesystem::path roc() const { return root / "eval" / "roc.csv"; }
  std::filesystem::path scores() const { return root / "eval" / "scores.jsonl"; }
  std::filesystem::path run_dir() const { return root / "run"; }
  std::filesystem::path run_report() const { return root / "run" / "report.json"; }
  std::filesystem::path run_manifest() const { return root / "run" / "manifest.jsonl"; }
};

struct CameraResult {
  int camera = 0;
  std::string stream;
  int triggers = 0;
  std::optional<double> score;  // empty when the gate never fired
  std::optional<Label> label;
};

struct ProductRecord {
  std::string product;
  std::vector<CameraResult> cameras;
  std::optional<Label> aggregated;  // empty when no camera produced a decision
  std::optional<Label> truth;
};

struct RunReport {
  std::vector<ProductRecord> products;
  std::optional<EvalReport> summary;  // present when every product has ground truth of both classes
};

std::string run_report_json(const RunReport& report, const std::string& config_hash);

/// Runs one stage. All artifacts go under config.output. Missing inputs raise
/// StageError naming the input; module errors are rethrown as StageError
/// prefixed with the stage name.
void run_pipeline(const PipelineConfig& config, Command command);

/// Writes the synthetic conveyor corpus (dataset.root) and demo streams
/// (run.streams) described by config.synth.
void write_synthetic_corpus(const PipelineConfig& config);

/// Stage result of `run`, also written to disk.
RunReport run_streams(const PipelineConfig& config);

}  // namespace flowspect
