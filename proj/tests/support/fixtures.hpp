#pragma once

#include <set>
#include <string>
#include <vector>

#include "case_study.hpp"
#include "mcdm/aism.hpp"
#include "mcdm/fusion.hpp"

namespace fixtures {

inline mcdm::MetricTable airline_metrics() {
  using namespace case_study;
  mcdm::SeparationTable sep;
  mcdm::UtilityRegretTable ur;
  for (std::size_t i = 0; i < kAirlines.size(); ++i) {
    sep.d_plus.push_back(kSeparation[i][0]);
    sep.d_minus.push_back(kSeparation[i][1]);
    ur.s_plus.push_back(kUtility[i][0]);
    ur.s_minus.push_back(kUtility[i][1]);
    ur.r_plus.push_back(kRegret[i][0]);
    ur.r_minus.push_back(kRegret[i][1]);
  }
  return mcdm::make_metric_table(kAirlines, sep, ur);
}

inline mcdm::BooleanMatrix bits(const std::vector<std::vector<int>>& rows) {
  return mcdm::BooleanMatrix::from_rows(rows);
}

/// Levels as a list of index sets, for order-insensitive comparison within a level.
inline std::vector<std::set<std::size_t>> as_sets(const mcdm::Levels& levels) {
  std::vector<std::set<std::size_t>> out;
  for (const auto& level : levels) out.emplace_back(level.begin(), level.end());
  return out;
}

inline std::vector<std::set<std::size_t>> as_sets(const std::vector<std::vector<int>>& levels) {
  std::vector<std::set<std::size_t>> out;
  for (const auto& level : levels) {
    std::set<std::size_t> s;
    for (int v : level) s.insert(static_cast<std::size_t>(v));
    out.push_back(s);
  }
  return out;
}

}  // namespace fixtures
