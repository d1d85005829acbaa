#include "mcdm/vikor.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "mcdm/error.hpp"

namespace mcdm {

RangeSpec best_worst(const NormalizedMatrix& n, std::span<const CriterionSpec> criteria) {
  if (n.cols() != criteria.size()) {
    throw ShapeError(fmt::format("matrix has {} columns but {} criteria", n.cols(), criteria.size()));
  }
  if (n.rows() == 0) throw EmptyInputError("no alternatives");
  RangeSpec range{std::vector<double>(n.cols()), std::vector<double>(n.cols())};
  for (std::size_t j = 0; j < n.cols(); ++j) {
    const auto col = n.values().column(j);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    const bool benefit = criteria[j].direction == Direction::Benefit;
    range.best[j] = benefit ? *hi : *lo;
    range.worst[j] = benefit ? *lo : *hi;
  }
  return range;
}

UtilityRegretTable utility_regret(const NormalizedMatrix& n, const WeightVector& w, const RangeSpec& range) {
  const std::size_t m = n.cols();
  if (w.size() != m || range.best.size() != m || range.worst.size() != m) {
    throw ShapeError("weights or range length does not match the matrix");
  }
  std::vector<bool> informative(m);
  bool any = false;
  for (std::size_t j = 0; j < m; ++j) {
    informative[j] = range.best[j] != range.worst[j];
    any = any || informative[j];
  }
  if (!any) throw DegenerateError("every criterion has best == worst; utility and regret are undefined");

  UtilityRegretTable out;
  out.s_plus.assign(n.rows(), 0.0);
  out.s_minus.assign(n.rows(), 0.0);
  out.r_plus.assign(n.rows(), 0.0);
  out.r_minus.assign(n.rows(), 0.0);
  for (std::size_t i = 0; i < n.rows(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!informative[j]) continue;
      const double g = (range.best[j] - n(i, j)) / (range.best[j] - range.worst[j]);
      const double to_best = w[j] * g;
      const double to_worst = w[j] * (1.0 - g);
      out.s_plus[i] += to_best;
      out.s_minus[i] += to_worst;
      out.r_plus[i] = std::max(out.r_plus[i], to_best);
      out.r_minus[i] = std::max(out.r_minus[i], to_worst);
    }
  }
  return out;
}

std::vector<double> classic_q(const UtilityRegretTable& table, double k) {
  if (k < 0.0 || k > 1.0) throw RangeError(fmt::format("allocation coefficient {} outside [0, 1]", k));
  if (table.size() == 0) throw EmptyInputError("empty utility/regret table");
  const auto [s_lo, s_hi] = std::minmax_element(table.s_plus.begin(), table.s_plus.end());
  const auto [r_lo, r_hi] = std::minmax_element(table.r_plus.begin(), table.r_plus.end());
  if (*s_hi == *s_lo) throw DegenerateError("group utility S+ is flat across alternatives");
  if (*r_hi == *r_lo) throw DegenerateError("individual regret R+ is flat across alternatives");
  std::vector<double> q(table.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = k * (table.s_plus[i] - *s_lo) / (*s_hi - *s_lo) +
           (1.0 - k) * (table.r_plus[i] - *r_lo) / (*r_hi - *r_lo);
  }
  return q;
}

}  // namespace mcdm
