#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mcdm/aism.hpp"
#include "mcdm/error.hpp"
#include "mcdm/fusion.hpp"
#include "mcdm/model.hpp"
#include "mcdm/sensitivity.hpp"
#include "mcdm/weights.hpp"

namespace mcdm {

/// A library error tagged with the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause);

  const std::string& stage() const noexcept { return stage_; }
  /// True when the underlying error was an InternalError.
  bool internal() const noexcept { return internal_; }

 private:
  std::string stage_;
  bool internal_;
};

enum class WeightMode { Entropy, File };

struct RunConfig {
  /// One decision-matrix or metric-table CSV, or several questionnaire sheets.
  std::vector<std::filesystem::path> inputs;
  WeightMode weight_mode = WeightMode::Entropy;
  std::filesystem::path weight_file;
  double k = kDefaultAllocation;
  double dominance_epsilon = 0.0;
  std::filesystem::path out_dir;
  std::vector<ProfileKind> profiles{ProfileKind::SixMetric, ProfileKind::Sdr, ProfileKind::Q};
  std::vector<double> k_grid = default_k_grid();
  double reference_k = kDefaultAllocation;

  /// Throws RangeError / EmptyInputError on an invalid configuration.
  void validate(bool needs_out_dir) const;
};

/// Everything computed up to the fused ranking.
struct Analysis {
  std::optional<DecisionMatrix> matrix;   // absent when the input is a metric table
  std::optional<EntropyReport> entropy;   // present in entropy mode with a decision matrix
  std::optional<WeightVector> weights;
  MetricTable metrics;
  SdrTable sdr;
  FusionTable fusion;
};

/// Loads the decision matrix from one file or averages several questionnaire sheets.
DecisionMatrix load_decision_matrix(const std::vector<std::filesystem::path>& inputs);

/// Runs ingestion, weighting, TOPSIS, VIKOR and fusion. Notes such as weight
/// renormalization go to `log`.
Analysis analyze(const RunConfig& cfg, std::ostream& log);

CriteriaProfile make_profile(const Analysis& analysis, ProfileKind kind);

/// Writes A.csv, B.csv, R.csv, S.csv (original nodes), R_condensed.csv,
/// S_condensed.csv, levels.txt, up.dot and down.dot into `dir`.
std::vector<std::filesystem::path> write_aism_artifacts(const AismPass& pass, ProfileKind kind,
                                                        const std::filesystem::path& dir);

struct PipelineResult {
  Analysis analysis;
  std::vector<AismPass> passes;  // one per cfg.profiles entry
  RankTrajectory sweep;
  std::vector<std::filesystem::path> written;
};

/// Full run writing every artifact under cfg.out_dir.
PipelineResult run_pipeline(const RunConfig& cfg, std::ostream& log);

}  // namespace mcdm
