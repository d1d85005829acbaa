#include "mcdm/fusion.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <unordered_set>

#include <fmt/format.h>

#include "mcdm/csv.hpp"
#include "mcdm/error.hpp"

namespace mcdm {
namespace {

constexpr std::array<std::string_view, 6> kMetricColumns = {"d_plus", "d_minus", "s_plus",
                                                            "s_minus", "r_plus", "r_minus"};

std::optional<std::size_t> find_column(const std::vector<std::string>& header, std::string_view name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

MetricTable make_metric_table(std::vector<std::string> alternatives, SeparationTable separation,
                              UtilityRegretTable utility) {
  const std::size_t n = alternatives.size();
  if (separation.d_plus.size() != n || separation.d_minus.size() != n || utility.s_plus.size() != n ||
      utility.s_minus.size() != n || utility.r_plus.size() != n || utility.r_minus.size() != n) {
    throw ShapeError(fmt::format("metric columns are not aligned on {} alternatives", n));
  }
  return {std::move(alternatives), std::move(separation), std::move(utility)};
}

bool looks_like_metric_csv(std::string_view csv_text) {
  const auto records = csv::split(csv_text);
  if (records.empty()) return false;
  const auto& header = records.front().fields;
  return std::all_of(kMetricColumns.begin(), kMetricColumns.end(),
                     [&](std::string_view c) { return find_column(header, c).has_value(); });
}

MetricTable parse_metric_table(std::string_view csv_text) {
  const auto records = csv::split(csv_text);
  if (records.empty()) throw EmptyInputError("metric CSV is empty");
  const auto& header = records.front();
  if (header.fields.empty() || header.fields.front() != "alternative") {
    throw ParseError(fmt::format("line {}: header must start with 'alternative'", header.line), header.line, 1);
  }
  std::array<std::size_t, 6> index{};
  for (std::size_t c = 0; c < kMetricColumns.size(); ++c) {
    const auto pos = find_column(header.fields, kMetricColumns[c]);
    if (!pos) {
      throw ParseError(fmt::format("line {}: metric column '{}' missing", header.line, kMetricColumns[c]),
                       header.line);
    }
    index[c] = *pos;
  }
  if (records.size() < 2) throw EmptyInputError("metric CSV has a header but no rows");

  std::vector<std::string> ids;
  std::array<std::vector<double>, 6> cols;
  std::unordered_set<std::string> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      throw ParseError(fmt::format("line {}: row has {} fields, expected {}", rec.line, rec.fields.size(),
                                   header.fields.size()),
                       rec.line);
    }
    if (!seen.insert(rec.fields.front()).second) {
      throw DuplicateIdError("duplicate alternative id: " + rec.fields.front());
    }
    ids.push_back(rec.fields.front());
    for (std::size_t c = 0; c < index.size(); ++c) {
      const double v = csv::parse_number(rec.fields[index[c]], rec.line, index[c] + 1);
      if (v < 0.0) {
        throw RangeError(fmt::format("line {}: metric {} must be nonnegative, got {}", rec.line,
                                     kMetricColumns[c], v));
      }
      cols[c].push_back(v);
    }
  }
  return make_metric_table(std::move(ids), SeparationTable{std::move(cols[0]), std::move(cols[1])},
                           UtilityRegretTable{std::move(cols[2]), std::move(cols[3]), std::move(cols[4]),
                                              std::move(cols[5])});
}

SdrTable sdr_means(std::vector<std::string> alternatives, const SeparationTable& sep,
                   const UtilityRegretTable& ur) {
  const std::size_t n = alternatives.size();
  if (sep.size() != n || ur.size() != n || sep.d_minus.size() != n || ur.s_minus.size() != n ||
      ur.r_plus.size() != n || ur.r_minus.size() != n) {
    throw ShapeError("separation and utility/regret tables are not aligned");
  }
  SdrTable out{std::move(alternatives), std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.plus[i] = (ur.s_plus[i] + sep.d_plus[i] + ur.r_plus[i]) / 3.0;
    out.minus[i] = (ur.s_minus[i] + sep.d_minus[i] + ur.r_minus[i]) / 3.0;
  }
  return out;
}

SdrTable sdr_means(const MetricTable& metrics) {
  return sdr_means(metrics.alternatives, metrics.separation, metrics.utility);
}

Badness badness(const SdrTable& sdr) {
  if (sdr.size() == 0) throw EmptyInputError("empty SDR table");
  if (sdr.plus.size() != sdr.size() || sdr.minus.size() != sdr.size()) {
    throw ShapeError("SDR columns are not aligned");
  }
  const auto [p_lo, p_hi] = std::minmax_element(sdr.plus.begin(), sdr.plus.end());
  const auto [m_lo, m_hi] = std::minmax_element(sdr.minus.begin(), sdr.minus.end());
  if (*p_hi == *p_lo) throw DegenerateError("SDR+ is flat across alternatives");
  if (*m_hi == *m_lo) throw DegenerateError("SDR- is flat across alternatives");
  Badness out{std::vector<double>(sdr.size()), std::vector<double>(sdr.size())};
  for (std::size_t i = 0; i < sdr.size(); ++i) {
    out.a[i] = (sdr.plus[i] - *p_lo) / (*p_hi - *p_lo);
    out.b[i] = (*m_hi - sdr.minus[i]) / (*m_hi - *m_lo);
  }
  return out;
}

RankAssignment rank_by_q(std::span<const double> q, const SdrTable& sdr) {
  const std::size_t n = q.size();
  if (sdr.size() != n) throw ShapeError("q vector and SDR table are not aligned");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (q[x] != q[y]) return q[x] < q[y];
    if (sdr.plus[x] != sdr.plus[y]) return sdr.plus[x] < sdr.plus[y];
    return sdr.alternatives[x] < sdr.alternatives[y];
  });
  RankAssignment out{std::vector<int>(n), std::vector<bool>(n, false)};
  for (std::size_t pos = 0; pos < n; ++pos) {
    out.rank[order[pos]] = static_cast<int>(pos) + 1;
    if (pos > 0 && q[order[pos]] == q[order[pos - 1]]) {
      out.tied[order[pos]] = true;
      out.tied[order[pos - 1]] = true;
    }
  }
  return out;
}

FusionTable compromise(const SdrTable& sdr, double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw RangeError(fmt::format("allocation coefficient {} outside [0, 1]", k));
  auto bad = badness(sdr);
  std::vector<double> q(sdr.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = (1.0 - k) * bad.a[i] + k * bad.b[i];
  auto ranks = rank_by_q(q, sdr);
  return {sdr.alternatives, sdr.plus,          sdr.minus,          std::move(bad.a), std::move(bad.b),
          std::move(q),     std::move(ranks.rank), std::move(ranks.tied), k};
}

namespace {

std::vector<std::size_t> by_rank(const FusionTable& table) {
  std::vector<std::size_t> order(table.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return table.rank[x] < table.rank[y]; });
  return order;
}

}  // namespace

std::string rank_report_csv(const FusionTable& table) {
  std::string out = "alternative,a,b,q,rank,tie\n";
  for (std::size_t i : by_rank(table)) {
    out += fmt::format("{},{},{},{},{},{}\n", csv::escape(table.alternatives[i]), csv::fixed(table.a[i]),
                       csv::fixed(table.b[i]), csv::fixed(table.q[i]), table.rank[i], table.tied[i] ? 1 : 0);
  }
  return out;
}

std::string rank_report_text(const FusionTable& table) {
  std::size_t width = std::string_view("alternative").size();
  for (const auto& a : table.alternatives) width = std::max(width, a.size());
  std::string out = fmt::format("{:>4}  {:<{}}  {:>8}  {:>8}  {:>8}\n", "rank", "alternative", width, "a", "b", "q");
  bool any_tie = false;
  for (std::size_t i : by_rank(table)) {
    out += fmt::format("{:>4}  {:<{}}  {:>8}  {:>8}  {:>8}{}\n", table.rank[i], table.alternatives[i], width,
                       csv::fixed(table.a[i], 4), csv::fixed(table.b[i], 4), csv::fixed(table.q[i], 6),
                       table.tied[i] ? "  (tie)" : "");
    any_tie = any_tie || table.tied[i];
  }
  if (any_tie) out += "ties in q broken by smaller SDR+, then alternative id\n";
  return out;
}

std::string metrics_csv(const MetricTable& metrics, const SdrTable& sdr) {
  if (sdr.size() != metrics.size()) throw ShapeError("metric and SDR tables are not aligned");
  std::string out = "alternative,d_plus,d_minus,s_plus,s_minus,r_plus,r_minus,sdr_plus,sdr_minus\n";
  const auto& sep = metrics.separation;
  const auto& ur = metrics.utility;
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", csv::escape(metrics.alternatives[i]),
                       csv::fixed(sep.d_plus[i]), csv::fixed(sep.d_minus[i]), csv::fixed(ur.s_plus[i]),
                       csv::fixed(ur.s_minus[i]), csv::fixed(ur.r_plus[i]), csv::fixed(ur.r_minus[i]),
                       csv::fixed(sdr.plus[i]), csv::fixed(sdr.minus[i]));
  }
  return out;
}

}  // namespace mcdm
