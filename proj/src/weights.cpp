#include "mcdm/weights.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "mcdm/csv.hpp"
#include "mcdm/error.hpp"

namespace mcdm {

EntropyReport entropy_weights(const NormalizedMatrix& n) {
  const std::size_t rows = n.rows();
  const std::size_t cols = n.cols();
  if (rows < 2) throw DegenerateError("entropy weighting needs at least two alternatives");
  if (cols == 0) throw EmptyInputError("entropy weighting needs at least one criterion");

  const double k = 1.0 / std::log(static_cast<double>(rows));
  Grid rho(rows, cols);
  std::vector<double> entropy(cols, 1.0);
  std::vector<double> variation(cols, 0.0);

  for (std::size_t j = 0; j < cols; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      const double r = n(i, j);
      if (r < 0.0) throw RangeError(fmt::format("negative normalized score at ({}, {})", i, j));
      sum += r;
    }
    if (sum == 0.0) continue;  // no information: e = 1, d = 0
    double acc = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      const double p = n(i, j) / sum;
      rho(i, j) = p;
      if (p > 0.0) acc += p * std::log(p);
    }
    entropy[j] = std::clamp(-k * acc, 0.0, 1.0);
    variation[j] = 1.0 - entropy[j];
  }

  double total = 0.0;
  for (double d : variation) total += d;
  std::vector<double> w(cols);
  if (total > 0.0) {
    for (std::size_t j = 0; j < cols; ++j) w[j] = variation[j] / total;
  } else {
    std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(cols));
  }
  return {std::move(rho), std::move(entropy), std::move(variation), WeightVector::normalized(std::move(w))};
}

ExplicitWeights parse_weight_file(std::string_view csv_text, std::span<const CriterionSpec> criteria) {
  const auto records = csv::split(csv_text);
  if (records.empty()) throw EmptyInputError("weights file is empty");
  std::size_t first = 0;
  if (records.front().fields.size() == 2 && records.front().fields[0] == "criterion") first = 1;

  std::vector<std::optional<double>> raw(criteria.size());
  for (std::size_t r = first; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != 2) {
      throw ParseError(fmt::format("line {}: expected 'criterion,weight'", rec.line), rec.line);
    }
    const auto it = std::find_if(criteria.begin(), criteria.end(),
                                 [&](const CriterionSpec& c) { return c.id == rec.fields[0]; });
    if (it == criteria.end()) {
      throw NotFoundError(fmt::format("line {}: unknown criterion '{}' in weights file", rec.line,
                                      rec.fields[0]));
    }
    auto& slot = raw[static_cast<std::size_t>(it - criteria.begin())];
    if (slot) throw DuplicateIdError("criterion listed twice in weights file: " + rec.fields[0]);
    const double w = csv::parse_number(rec.fields[1], rec.line, 2);
    if (w < 0.0) throw RangeError(fmt::format("line {}: negative weight {}", rec.line, w));
    slot = w;
  }

  std::vector<double> values;
  double sum = 0.0;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    if (!raw[j]) throw ShapeError("weights file has no entry for criterion " + criteria[j].id);
    values.push_back(*raw[j]);
    sum += *raw[j];
  }
  if (std::abs(sum - 1.0) > kWeightFileTolerance) {
    throw RangeError(fmt::format("weights sum to {:.6f}; must be within {} of 1", sum, kWeightFileTolerance));
  }
  const bool renormalized = std::abs(sum - 1.0) > WeightVector::kSumTolerance;
  return {WeightVector::normalized(std::move(values)), sum, renormalized};
}

std::string weights_report_csv(const EntropyReport& report, std::span<const CriterionSpec> criteria) {
  std::string out = "criterion,entropy,variation,weight,weight_percent\n";
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    out += fmt::format("{},{},{},{},{}\n", csv::escape(criteria[j].id), csv::fixed(report.entropy[j]),
                       csv::fixed(report.variation[j]), csv::fixed(report.weights[j]),
                       csv::fixed(100.0 * report.weights[j], 3));
  }
  return out;
}

std::string weights_report_text(const EntropyReport& report, std::span<const CriterionSpec> criteria) {
  std::size_t width = std::string_view("criterion").size();
  for (const auto& c : criteria) width = std::max(width, c.id.size());
  std::string out = fmt::format("{:<{}}  {:>10}\n", "criterion", width, "weight %");
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    out += fmt::format("{:<{}}  {:>10}\n", criteria[j].id, width, csv::fixed(100.0 * report.weights[j], 3));
  }
  return out;
}

}  // namespace mcdm
