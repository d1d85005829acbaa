#pragma once

#include <span>
#include <vector>

#include "mcdm/model.hpp"

namespace mcdm {

/// Best (f+) and worst (f-) value of every criterion.
struct RangeSpec {
  std::vector<double> best;
  std::vector<double> worst;
};

/// Group utility S and individual regret R, each measured from the best
/// point (+) and from the worst point (-).
struct UtilityRegretTable {
  std::vector<double> s_plus;
  std::vector<double> s_minus;
  std::vector<double> r_plus;
  std::vector<double> r_minus;

  std::size_t size() const noexcept { return s_plus.size(); }
};

RangeSpec best_worst(const NormalizedMatrix& n, std::span<const CriterionSpec> criteria);

/// With g_ij = (f+_j - f_ij) / (f+_j - f-_j):
///   S+ = sum_j w_j g_ij        S- = sum_j w_j (1 - g_ij)
///   R+ = max_j w_j g_ij        R- = max_j w_j (1 - g_ij)
/// A criterion with f+ = f- contributes nothing to any of the four values.
/// Throws DegenerateError when every criterion is flat.
UtilityRegretTable utility_regret(const NormalizedMatrix& n, const WeightVector& w, const RangeSpec& range);

inline constexpr double kDefaultAllocation = 0.5;

/// Classic compromise index
///   Q = k (S+ - min S+)/(max S+ - min S+) + (1 - k)(R+ - min R+)/(max R+ - min R+),
/// smaller is better.
std::vector<double> classic_q(const UtilityRegretTable& table, double k = kDefaultAllocation);

}  // namespace mcdm
