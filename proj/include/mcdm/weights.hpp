#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcdm/grid.hpp"
#include "mcdm/model.hpp"

namespace mcdm {

/// Intermediate quantities of the entropy weight method.
struct EntropyReport {
  Grid rho;                        // sample proportions, each column sums to 1
  std::vector<double> entropy;     // e_j in [0, 1]
  std::vector<double> variation;   // d_j = 1 - e_j
  WeightVector weights;
};

/// Objective criterion weights from column entropy of the normalized matrix.
///
/// Uses 0 ln 0 = 0; an all-zero column has entropy 1 and weight 0. When no
/// column carries information (every d_j = 0) the weights are uniform.
/// Throws DegenerateError for a single alternative and RangeError for
/// negative entries.
EntropyReport entropy_weights(const NormalizedMatrix& n);

/// Outcome of reading an explicit weights file.
struct ExplicitWeights {
  WeightVector weights;
  double raw_sum = 1.0;
  bool renormalized = false;
};

/// Maximum |sum - 1| for which an explicit weights file is renormalized
/// instead of rejected.
inline constexpr double kWeightFileTolerance = 0.01;

/// Parses a `criterion,weight` CSV. Every criterion must appear exactly once;
/// rows may come in any order and are returned in `criteria` order.
ExplicitWeights parse_weight_file(std::string_view csv_text, std::span<const CriterionSpec> criteria);

/// Table-style report: criterion, entropy, variation, weight, weight percent.
std::string weights_report_csv(const EntropyReport& report, std::span<const CriterionSpec> criteria);
std::string weights_report_text(const EntropyReport& report, std::span<const CriterionSpec> criteria);

}  // namespace mcdm
