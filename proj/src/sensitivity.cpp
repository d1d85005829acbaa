#include "mcdm/sensitivity.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <fmt/format.h>

#include "mcdm/csv.hpp"
#include "mcdm/error.hpp"

namespace mcdm {
namespace {

constexpr double kGridMatchTolerance = 1e-9;

double parse_grid_number(std::string_view token, std::string_view spec) {
  try {
    return csv::parse_number(token, 1, 1);
  } catch (const ParseError&) {
    throw ParseError(fmt::format("bad k grid '{}': '{}' is not a number", spec, token), 1);
  }
}

}  // namespace

RankTrajectory sweep_k(const SdrTable& sdr, std::span<const double> grid) {
  if (grid.empty()) throw RangeError("k grid is empty");
  for (double k : grid) {
    if (!(k >= 0.0 && k <= 1.0)) throw RangeError(fmt::format("k = {} outside [0, 1]", k));
  }
  const Badness bad = badness(sdr);
  RankTrajectory t;
  t.alternatives = sdr.alternatives;
  t.grid.assign(grid.begin(), grid.end());
  for (double k : grid) {
    std::vector<double> q(sdr.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = (1.0 - k) * bad.a[i] + k * bad.b[i];
    t.ranks.push_back(rank_by_q(q, sdr).rank);
    t.q.push_back(std::move(q));
  }
  return t;
}

std::vector<int> max_rank_shift(const RankTrajectory& t, double reference_k) {
  std::size_t ref = t.grid.size();
  for (std::size_t g = 0; g < t.grid.size(); ++g) {
    if (std::abs(t.grid[g] - reference_k) <= kGridMatchTolerance) {
      ref = g;
      break;
    }
  }
  if (ref == t.grid.size()) throw NotFoundError(fmt::format("reference k = {} is not on the grid", reference_k));
  std::vector<int> shift(t.alternatives.size(), 0);
  for (const auto& ranks : t.ranks) {
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = std::max(shift[i], std::abs(ranks[i] - t.ranks[ref][i]));
    }
  }
  return shift;
}

std::vector<double> parse_k_grid(std::string_view spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos) {
    throw ParseError(fmt::format("bad k grid '{}': expected start:stop:step", spec), 1);
  }
  const double start = parse_grid_number(spec.substr(0, c1), spec);
  const double stop = parse_grid_number(spec.substr(c1 + 1, c2 - c1 - 1), spec);
  const double step = parse_grid_number(spec.substr(c2 + 1), spec);
  if (!(step > 0.0)) throw RangeError(fmt::format("bad k grid '{}': step must be positive", spec));
  if (stop < start) throw RangeError(fmt::format("bad k grid '{}': stop precedes start", spec));
  const double span = (stop - start) / step;
  if (span > 1e6) throw RangeError(fmt::format("bad k grid '{}': too many points", spec));
  const auto intervals = static_cast<std::size_t>(std::floor(span + 1e-9));
  std::vector<double> grid;
  for (std::size_t i = 0; i <= intervals; ++i) {
    // snap to 12 decimals so 0.1 * 3 prints and matches as 0.3
    grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  if (std::abs(grid.back() - stop) <= kGridMatchTolerance) grid.back() = stop;
  for (double k : grid) {
    if (!(k >= 0.0 && k <= 1.0)) throw RangeError(fmt::format("k = {} outside [0, 1]", k));
  }
  return grid;
}

std::vector<double> default_k_grid() { return parse_k_grid("0:1:0.05"); }

std::string sweep_csv(const RankTrajectory& t) {
  std::string out = "k,alternative,q,rank\n";
  for (std::size_t g = 0; g < t.grid.size(); ++g) {
    for (std::size_t i = 0; i < t.alternatives.size(); ++i) {
      out += fmt::format("{},{},{},{}\n", csv::fixed(t.grid[g]), csv::escape(t.alternatives[i]),
                         csv::fixed(t.q[g][i]), t.ranks[g][i]);
    }
  }
  return out;
}

}  // namespace mcdm
