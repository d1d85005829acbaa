#include "mcdm/pipeline.hpp"

#include <fmt/format.h>

#include "mcdm/csv.hpp"

namespace mcdm {
namespace {

template <typename F>
auto stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e);
  }
}

std::string explicit_weights_csv(const WeightVector& w, std::span<const CriterionSpec> criteria) {
  std::string out = "criterion,weight,weight_percent\n";
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    out += fmt::format("{},{},{}\n", csv::escape(criteria[j].id), csv::fixed(w[j]), csv::fixed(100.0 * w[j], 3));
  }
  return out;
}

}  // namespace

StageError::StageError(std::string stage, const Error& cause)
    : Error(stage + ": " + cause.what()),
      stage_(std::move(stage)),
      internal_(dynamic_cast<const InternalError*>(&cause) != nullptr) {}

void RunConfig::validate(bool needs_out_dir) const {
  if (inputs.empty()) throw EmptyInputError("no input file given");
  for (const auto& p : inputs) {
    if (p.empty()) throw EmptyInputError("empty input path");
  }
  if (weight_mode == WeightMode::File && weight_file.empty()) throw EmptyInputError("empty weights file path");
  if (!(k >= 0.0 && k <= 1.0)) throw RangeError(fmt::format("k = {} outside [0, 1]", k));
  if (!(dominance_epsilon >= 0.0)) throw RangeError("dominance epsilon must be nonnegative");
  if (needs_out_dir && out_dir.empty()) throw EmptyInputError("no output directory given");
  if (k_grid.empty()) throw RangeError("k grid is empty");
}

DecisionMatrix load_decision_matrix(const std::vector<std::filesystem::path>& inputs) {
  if (inputs.empty()) throw EmptyInputError("no input file given");
  auto parse = [](const std::filesystem::path& p) {
    try {
      return parse_decision_matrix(csv::read_file(p));
    } catch (const ParseError& e) {
      throw ParseError(p.string() + ": " + e.what(), e.line(), e.column());
    }
  };
  if (inputs.size() == 1) return parse(inputs.front());
  std::vector<DecisionMatrix> sheets;
  for (const auto& p : inputs) sheets.push_back(parse(p));
  return aggregate_questionnaires(sheets);
}

Analysis analyze(const RunConfig& cfg, std::ostream& log) {
  stage("config", [&] { cfg.validate(false); });
  Analysis out;
  const bool metric_input =
      cfg.inputs.size() == 1 &&
      stage("ingest", [&] { return looks_like_metric_csv(csv::read_file(cfg.inputs.front())); });

  if (metric_input) {
    out.metrics = stage("ingest", [&] { return parse_metric_table(csv::read_file(cfg.inputs.front())); });
    if (cfg.weight_mode == WeightMode::File) {
      log << "note: input is a metric table; weights file " << cfg.weight_file.string() << " is not used\n";
    }
  } else {
    out.matrix = stage("ingest", [&] { return load_decision_matrix(cfg.inputs); });
    const DecisionMatrix& m = *out.matrix;
    const NormalizedMatrix n = stage("normalize", [&] { return normalize(m); });
    if (cfg.weight_mode == WeightMode::Entropy) {
      out.entropy = stage("weights", [&] { return entropy_weights(n); });
      out.weights = out.entropy->weights;
    } else {
      const auto loaded = stage("weights", [&] {
        return parse_weight_file(csv::read_file(cfg.weight_file), m.criteria());
      });
      if (loaded.renormalized) {
        log << fmt::format("warning: weights in {} sum to {:.6f}; renormalized to 1\n", cfg.weight_file.string(),
                           loaded.raw_sum);
      }
      out.weights = loaded.weights;
    }
    const WeightVector& w = *out.weights;
    const auto sep = stage("topsis", [&] {
      const WeightedMatrix t = apply_weights(n, w);
      return separations(t, ideal_solutions(t, m.criteria()));
    });
    const auto ur = stage("vikor", [&] { return utility_regret(n, w, best_worst(n, m.criteria())); });
    out.metrics = stage("fusion", [&] { return make_metric_table(m.alternatives(), sep, ur); });
  }
  out.sdr = stage("fusion", [&] { return sdr_means(out.metrics); });
  out.fusion = stage("fusion", [&] { return compromise(out.sdr, cfg.k); });
  return out;
}

CriteriaProfile make_profile(const Analysis& analysis, ProfileKind kind) {
  switch (kind) {
    case ProfileKind::SixMetric: return six_metric_profile(analysis.metrics);
    case ProfileKind::Sdr: return sdr_profile(analysis.sdr);
    case ProfileKind::Q: return q_profile(analysis.fusion);
  }
  throw InternalError("unhandled profile kind");
}

std::vector<std::filesystem::path> write_aism_artifacts(const AismPass& pass, ProfileKind kind,
                                                        const std::filesystem::path& dir) {
  const std::string name(to_string(kind));
  const auto& h = pass.hierarchy;
  const std::vector<std::pair<std::string, std::string>> files = {
      {"A.csv", matrix_csv(pass.adjacency)},
      {"B.csv", matrix_csv(pass.multiplicative)},
      {"R.csv", matrix_csv(pass.reachable)},
      {"S.csv", matrix_csv(h.general_skeleton)},
      {"R_condensed.csv", matrix_csv(h.condensation.reduced)},
      {"S_condensed.csv", matrix_csv(h.skeleton)},
      {"levels.txt", "UP:   " + format_levels(h, Extraction::Up) + "\nDOWN: " +
                         format_levels(h, Extraction::Down) + "\n"},
      {"up.dot", to_dot(h, Extraction::Up, name + "_up")},
      {"down.dot", to_dot(h, Extraction::Down, name + "_down")},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [file, content] : files) {
    csv::write_file(dir / file, content);
    written.push_back(dir / file);
  }
  return written;
}

PipelineResult run_pipeline(const RunConfig& cfg, std::ostream& log) {
  stage("config", [&] { cfg.validate(true); });
  PipelineResult result;
  result.analysis = analyze(cfg, log);
  const Analysis& a = result.analysis;

  auto emit = [&](const std::filesystem::path& p, const std::string& content) {
    stage("output", [&] { csv::write_file(p, content); });
    result.written.push_back(p);
  };

  if (a.entropy) {
    emit(cfg.out_dir / "weights.csv", weights_report_csv(*a.entropy, a.matrix->criteria()));
  } else if (a.weights) {
    emit(cfg.out_dir / "weights.csv", explicit_weights_csv(*a.weights, a.matrix->criteria()));
  }
  emit(cfg.out_dir / "metrics.csv", metrics_csv(a.metrics, a.sdr));
  emit(cfg.out_dir / "ranking.csv", rank_report_csv(a.fusion));

  for (ProfileKind kind : cfg.profiles) {
    auto pass = stage("aism", [&] { return run_aism(make_profile(a, kind), cfg.dominance_epsilon); });
    const auto files = stage("output", [&] {
      return write_aism_artifacts(pass, kind, cfg.out_dir / "aism" / std::string(to_string(kind)));
    });
    result.written.insert(result.written.end(), files.begin(), files.end());
    result.passes.push_back(std::move(pass));
  }

  result.sweep = stage("sensitivity", [&] { return sweep_k(a.sdr, cfg.k_grid); });
  stage("sensitivity", [&] { return max_rank_shift(result.sweep, cfg.reference_k); });
  emit(cfg.out_dir / "sweep.csv", sweep_csv(result.sweep));
  return result;
}

}  // namespace mcdm
