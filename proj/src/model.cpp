#include "mcdm/model.hpp"

#include <cmath>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

#include "mcdm/csv.hpp"
#include "mcdm/error.hpp"

namespace mcdm {
namespace {

CriterionSpec parse_criterion_header(const std::string& cell, std::size_t line, std::size_t column) {
  const auto colon = cell.rfind(':');
  if (colon == std::string::npos) {
    throw ParseError(fmt::format("line {}: criterion '{}' lacks a ':benefit' or ':cost' suffix",
                                 line, cell),
                     line, column);
  }
  const std::string id = cell.substr(0, colon);
  const std::string suffix = cell.substr(colon + 1);
  Direction dir;
  if (suffix == "benefit") {
    dir = Direction::Benefit;
  } else if (suffix == "cost") {
    dir = Direction::Cost;
  } else {
    throw ParseError(fmt::format("line {}: unknown criterion direction '{}'", line, suffix), line,
                     column);
  }
  if (id.empty()) throw ParseError(fmt::format("line {}: empty criterion id", line), line, column);
  return {id, id, dir};
}

}  // namespace

std::string_view to_string(Direction d) { return d == Direction::Benefit ? "benefit" : "cost"; }

DecisionMatrix::DecisionMatrix(std::vector<std::string> alternatives,
                               std::vector<CriterionSpec> criteria, Grid values)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      values_(std::move(values)) {
  if (alternatives_.empty() || criteria_.empty()) {
    throw EmptyInputError("decision matrix needs at least one alternative and one criterion");
  }
  if (values_.rows() != alternatives_.size() || values_.cols() != criteria_.size()) {
    throw ShapeError(fmt::format("decision matrix values are {}x{}, expected {}x{}", values_.rows(),
                                 values_.cols(), alternatives_.size(), criteria_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& a : alternatives_) {
    if (!seen.insert(a).second) throw DuplicateIdError("duplicate alternative id: " + a);
  }
  seen.clear();
  for (const auto& c : criteria_) {
    if (!seen.insert(c.id).second) throw DuplicateIdError("duplicate criterion id: " + c.id);
  }
  for (std::size_t i = 0; i < values_.rows(); ++i) {
    for (std::size_t j = 0; j < values_.cols(); ++j) {
      if (!std::isfinite(values_(i, j))) {
        throw RangeError(fmt::format("non-finite score at ({}, {})", alternatives_[i], criteria_[j].id));
      }
    }
  }
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw EmptyInputError("weight vector is empty");
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) throw RangeError(fmt::format("invalid weight {}", w));
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw RangeError(fmt::format("weights sum to {:.12f}, expected 1", sum));
  }
}

WeightVector WeightVector::uniform(std::size_t m) {
  if (m == 0) throw EmptyInputError("weight vector is empty");
  return WeightVector(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

WeightVector WeightVector::normalized(std::vector<double> raw) {
  double sum = 0.0;
  for (double w : raw) {
    if (!std::isfinite(w) || w < 0.0) throw RangeError(fmt::format("invalid weight {}", w));
    sum += w;
  }
  if (sum <= 0.0) throw DegenerateError("weights sum to zero");
  for (double& w : raw) w /= sum;
  return WeightVector(std::move(raw));
}

DecisionMatrix parse_decision_matrix(std::string_view csv_text) {
  const auto records = csv::split(csv_text);
  if (records.empty()) throw EmptyInputError("decision matrix CSV is empty");

  const auto& header = records.front();
  if (header.fields.empty() || header.fields.front() != "alternative") {
    throw ParseError(fmt::format("line {}: header must start with 'alternative'", header.line),
                     header.line, 1);
  }
  if (header.fields.size() < 2) {
    throw ParseError(fmt::format("line {}: header lists no criteria", header.line), header.line);
  }
  std::vector<CriterionSpec> criteria;
  for (std::size_t c = 1; c < header.fields.size(); ++c) {
    criteria.push_back(parse_criterion_header(header.fields[c], header.line, c + 1));
  }
  if (records.size() < 2) throw EmptyInputError("decision matrix CSV has a header but no rows");

  const std::size_t m = criteria.size();
  std::vector<std::string> alternatives;
  Grid values(records.size() - 1, m);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != m + 1) {
      throw ParseError(fmt::format("line {}: row has {} fields, expected {}", rec.line,
                                   rec.fields.size(), m + 1),
                       rec.line);
    }
    if (rec.fields.front().empty()) {
      throw ParseError(fmt::format("line {}: empty alternative id", rec.line), rec.line, 1);
    }
    alternatives.push_back(rec.fields.front());
    for (std::size_t j = 0; j < m; ++j) {
      values(r - 1, j) = csv::parse_number(rec.fields[j + 1], rec.line, j + 2);
    }
  }
  return DecisionMatrix(std::move(alternatives), std::move(criteria), std::move(values));
}

DecisionMatrix aggregate_questionnaires(std::span<const DecisionMatrix> sheets) {
  if (sheets.empty()) throw EmptyInputError("no questionnaire sheets given");
  const auto& first = sheets.front();
  Grid sum(first.rows(), first.cols());
  for (std::size_t s = 0; s < sheets.size(); ++s) {
    const auto& sheet = sheets[s];
    if (sheet.alternatives() != first.alternatives() || sheet.criteria() != first.criteria()) {
      throw ShapeError(fmt::format("questionnaire sheet {} differs in alternatives or criteria from sheet 1",
                                   s + 1));
    }
    for (std::size_t i = 0; i < sheet.rows(); ++i) {
      for (std::size_t j = 0; j < sheet.cols(); ++j) {
        const double x = sheet(i, j);
        if (x < kQuestionnaireMin || x > kQuestionnaireMax) {
          throw RangeError(fmt::format("sheet {}: score {} for ({}, {}) outside [1, 5]", s + 1, x,
                                       sheet.alternatives()[i], sheet.criteria()[j].id));
        }
        sum(i, j) += x;
      }
    }
  }
  const double count = static_cast<double>(sheets.size());
  for (std::size_t i = 0; i < sum.rows(); ++i) {
    for (std::size_t j = 0; j < sum.cols(); ++j) sum(i, j) /= count;
  }
  return DecisionMatrix(first.alternatives(), first.criteria(), std::move(sum));
}

NormalizedMatrix normalize(const Grid& values) {
  Grid out(values.rows(), values.cols());
  for (std::size_t j = 0; j < values.cols(); ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < values.rows(); ++i) sq += values(i, j) * values(i, j);
    if (sq == 0.0) continue;
    const double norm = std::sqrt(sq);
    for (std::size_t i = 0; i < values.rows(); ++i) out(i, j) = values(i, j) / norm;
  }
  return NormalizedMatrix(std::move(out));
}

NormalizedMatrix normalize(const DecisionMatrix& m) { return normalize(m.values()); }

WeightedMatrix apply_weights(const NormalizedMatrix& n, const WeightVector& w) {
  if (n.cols() != w.size()) {
    throw ShapeError(fmt::format("matrix has {} criteria but {} weights were given", n.cols(), w.size()));
  }
  Grid out(n.rows(), n.cols());
  for (std::size_t i = 0; i < n.rows(); ++i) {
    for (std::size_t j = 0; j < n.cols(); ++j) out(i, j) = n(i, j) * w[j];
  }
  return WeightedMatrix(std::move(out));
}

std::string to_csv(const DecisionMatrix& m) {
  std::string out = "alternative";
  for (const auto& c : m.criteria()) out += "," + csv::escape(c.id + ":" + std::string(to_string(c.direction)));
  out += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += csv::escape(m.alternatives()[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) out += "," + csv::fixed(m(i, j));
    out += '\n';
  }
  return out;
}

}  // namespace mcdm
