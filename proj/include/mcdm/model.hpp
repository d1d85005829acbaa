#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcdm/grid.hpp"

namespace mcdm {

enum class Direction { Benefit, Cost };

std::string_view to_string(Direction d);

struct CriterionSpec {
  std::string id;
  std::string label;
  Direction direction = Direction::Benefit;

  bool operator==(const CriterionSpec&) const = default;
};

/// Alternatives x criteria score grid (the original evaluation matrix).
///
/// Construction validates the shape, finiteness of every score and
/// uniqueness of alternative and criterion ids; instances are immutable.
class DecisionMatrix {
 public:
  DecisionMatrix(std::vector<std::string> alternatives, std::vector<CriterionSpec> criteria,
                 Grid values);

  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<CriterionSpec>& criteria() const noexcept { return criteria_; }
  const Grid& values() const noexcept { return values_; }

  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t cols() const noexcept { return values_.cols(); }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

  bool operator==(const DecisionMatrix&) const = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<CriterionSpec> criteria_;
  Grid values_;
};

/// Nonnegative per-criterion weights summing to one (within 1e-9).
class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-9;

  explicit WeightVector(std::vector<double> weights);

  static WeightVector uniform(std::size_t m);
  /// Divides nonnegative raw values by their sum; throws DegenerateError on a zero sum.
  static WeightVector normalized(std::vector<double> raw);

  std::span<const double> values() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t j) const { return weights_[j]; }

 private:
  std::vector<double> weights_;
};

/// Column-wise vector-normalized scores r_ij.
class NormalizedMatrix {
 public:
  explicit NormalizedMatrix(Grid values) : values_(std::move(values)) {}
  const Grid& values() const noexcept { return values_; }
  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t cols() const noexcept { return values_.cols(); }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

 private:
  Grid values_;
};

/// Normalized scores scaled by criterion weight, t_ij = r_ij * w_j.
class WeightedMatrix {
 public:
  explicit WeightedMatrix(Grid values) : values_(std::move(values)) {}
  const Grid& values() const noexcept { return values_; }
  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t cols() const noexcept { return values_.cols(); }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

 private:
  Grid values_;
};

/// Reads the decision-matrix CSV layout:
///
///     alternative,seat_comfort:benefit,fare:cost
///     Qatar Airways,4.2,3.1
///
/// Row and column order are preserved.
DecisionMatrix parse_decision_matrix(std::string_view csv_text);

/// Cell-wise mean of per-expert sheets. All sheets must share alternatives and
/// criteria and every score must lie on the 1..5 questionnaire scale.
DecisionMatrix aggregate_questionnaires(std::span<const DecisionMatrix> sheets);

inline constexpr double kQuestionnaireMin = 1.0;
inline constexpr double kQuestionnaireMax = 5.0;

/// r_ij = x_ij / sqrt(sum_k x_kj^2); an all-zero column stays all zero.
NormalizedMatrix normalize(const DecisionMatrix& m);

NormalizedMatrix normalize(const Grid& values);

WeightedMatrix apply_weights(const NormalizedMatrix& n, const WeightVector& w);

std::string to_csv(const DecisionMatrix& m);

}  // namespace mcdm
