#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcdm/topsis.hpp"
#include "mcdm/vikor.hpp"

namespace mcdm {

/// Per-alternative TOPSIS separations and VIKOR utility/regret, the six
/// metrics that feed the fused compromise.
struct MetricTable {
  std::vector<std::string> alternatives;
  SeparationTable separation;
  UtilityRegretTable utility;

  std::size_t size() const noexcept { return alternatives.size(); }
};

/// Bundles the two tables; throws ShapeError when their lengths disagree.
MetricTable make_metric_table(std::vector<std::string> alternatives, SeparationTable separation,
                              UtilityRegretTable utility);

/// True when the CSV header names the six metric columns.
bool looks_like_metric_csv(std::string_view csv_text);

/// Reads `alternative,d_plus,d_minus,s_plus,s_minus,r_plus,r_minus` (any
/// column order; extra columns such as sdr_plus are ignored).
MetricTable parse_metric_table(std::string_view csv_text);

struct SdrTable {
  std::vector<std::string> alternatives;
  std::vector<double> plus;
  std::vector<double> minus;

  std::size_t size() const noexcept { return alternatives.size(); }
};

/// SDR+ = (S+ + D+ + R+)/3 and SDR- = (S- + D- + R-)/3.
SdrTable sdr_means(const MetricTable& metrics);
SdrTable sdr_means(std::vector<std::string> alternatives, const SeparationTable& sep,
                   const UtilityRegretTable& ur);

/// Normalized badness scores: a from SDR+ (smaller SDR+ is better) and b from
/// SDR- (larger SDR- is better), both spanning [0, 1].
struct Badness {
  std::vector<double> a;
  std::vector<double> b;
};

Badness badness(const SdrTable& sdr);

struct RankAssignment {
  std::vector<int> rank;    // 1-based, a permutation of 1..n
  std::vector<bool> tied;   // q equal to some other alternative's q
};

/// Ranks ascending in q; exact ties fall back to smaller SDR+, then to the
/// alternative id.
RankAssignment rank_by_q(std::span<const double> q, const SdrTable& sdr);

struct FusionTable {
  std::vector<std::string> alternatives;
  std::vector<double> sdr_plus;
  std::vector<double> sdr_minus;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> q;
  std::vector<int> rank;
  std::vector<bool> tied;
  double k = 0.5;

  std::size_t size() const noexcept { return alternatives.size(); }
};

/// q_i = (1 - k) a_i + k b_i, ranked ascending.
FusionTable compromise(const SdrTable& sdr, double k = kDefaultAllocation);

/// Ranking rows sorted by rank: alternative,a,b,q,rank,tie.
std::string rank_report_csv(const FusionTable& table);
std::string rank_report_text(const FusionTable& table);

/// Metric rows in input order:
/// alternative,d_plus,d_minus,s_plus,s_minus,r_plus,r_minus,sdr_plus,sdr_minus.
std::string metrics_csv(const MetricTable& metrics, const SdrTable& sdr);

}  // namespace mcdm
