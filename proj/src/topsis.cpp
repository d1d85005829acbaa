#include "mcdm/topsis.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mcdm/error.hpp"

namespace mcdm {

IdealPair ideal_solutions(const WeightedMatrix& t, std::span<const CriterionSpec> criteria) {
  if (t.cols() != criteria.size()) {
    throw ShapeError(fmt::format("weighted matrix has {} columns but {} criteria", t.cols(), criteria.size()));
  }
  if (t.rows() == 0) throw EmptyInputError("no alternatives");
  IdealPair ideal{std::vector<double>(t.cols()), std::vector<double>(t.cols())};
  for (std::size_t j = 0; j < t.cols(); ++j) {
    double lo = t(0, j);
    double hi = t(0, j);
    for (std::size_t i = 1; i < t.rows(); ++i) {
      lo = std::min(lo, t(i, j));
      hi = std::max(hi, t(i, j));
    }
    const bool benefit = criteria[j].direction == Direction::Benefit;
    ideal.positive[j] = benefit ? hi : lo;
    ideal.negative[j] = benefit ? lo : hi;
  }
  return ideal;
}

SeparationTable separations(const WeightedMatrix& t, const IdealPair& ideal) {
  if (ideal.positive.size() != t.cols() || ideal.negative.size() != t.cols()) {
    throw ShapeError("ideal point length does not match the weighted matrix");
  }
  SeparationTable out{std::vector<double>(t.rows()), std::vector<double>(t.rows())};
  for (std::size_t i = 0; i < t.rows(); ++i) {
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const double dp = t(i, j) - ideal.positive[j];
      const double dm = t(i, j) - ideal.negative[j];
      plus += dp * dp;
      minus += dm * dm;
    }
    out.d_plus[i] = std::sqrt(plus);
    out.d_minus[i] = std::sqrt(minus);
  }
  return out;
}

}  // namespace mcdm
