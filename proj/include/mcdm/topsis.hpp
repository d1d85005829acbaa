#pragma once

#include <span>
#include <vector>

#include "mcdm/model.hpp"

namespace mcdm {

/// Positive (F+) and negative (F-) ideal points of a weighted matrix.
struct IdealPair {
  std::vector<double> positive;
  std::vector<double> negative;
};

/// Euclidean distances of each alternative to the ideal points.
struct SeparationTable {
  std::vector<double> d_plus;
  std::vector<double> d_minus;

  std::size_t size() const noexcept { return d_plus.size(); }
};

/// Column max/min for benefit criteria, min/max for cost criteria.
IdealPair ideal_solutions(const WeightedMatrix& t, std::span<const CriterionSpec> criteria);

SeparationTable separations(const WeightedMatrix& t, const IdealPair& ideal);

}  // namespace mcdm
