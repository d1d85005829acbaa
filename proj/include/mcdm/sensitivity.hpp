#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcdm/fusion.hpp"

namespace mcdm {

/// Rankings and compromise scores across a grid of allocation coefficients.
struct RankTrajectory {
  std::vector<std::string> alternatives;
  std::vector<double> grid;
  std::vector<std::vector<int>> ranks;  // ranks[g][i] at grid[g]
  std::vector<std::vector<double>> q;   // q[g][i] at grid[g]
};

/// Evaluates the compromise at every k in `grid`; the badness scores a, b are
/// computed once. Throws RangeError for an empty grid or k outside [0, 1].
RankTrajectory sweep_k(const SdrTable& sdr, std::span<const double> grid);

/// Per alternative, the largest |rank(k) - rank(reference_k)| over the grid.
/// Throws NotFoundError when reference_k is not a grid point (within 1e-9).
std::vector<int> max_rank_shift(const RankTrajectory& t, double reference_k);

/// Parses "start:stop:step" into an inclusive grid.
std::vector<double> parse_k_grid(std::string_view spec);

/// 0, 0.05, ..., 1.
std::vector<double> default_k_grid();

/// Long-form k,alternative,q,rank rows ordered by grid position then input order.
std::string sweep_csv(const RankTrajectory& t);

}  // namespace mcdm
