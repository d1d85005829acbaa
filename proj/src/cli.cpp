#include "mcdm/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mcdm/csv.hpp"
#include "mcdm/pipeline.hpp"

namespace mcdm::cli {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kSubcommands = {"weights", "rank", "aism", "sensitivity", "pipeline"};

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string closest_subcommand(std::string_view word) {
  return *std::min_element(kSubcommands.begin(), kSubcommands.end(), [&](const auto& x, const auto& y) {
    return edit_distance(word, x) < edit_distance(word, y);
  });
}

struct InputOptions {
  std::vector<std::string> inputs;
  std::string weights = "entropy";
  double k = kDefaultAllocation;
};

void add_input_options(CLI::App& cmd, InputOptions& opt, bool with_k, bool with_weights = true) {
  cmd.add_option("--input", opt.inputs,
                 "Decision-matrix or metric-table CSV; repeat to average questionnaire sheets")
      ->required();
  if (with_weights) {
    cmd.add_option("--weights", opt.weights, "'entropy' or a criterion,weight CSV file")
        ->capture_default_str();
  }
  if (with_k) {
    cmd.add_option("--k", opt.k, "Allocation coefficient in [0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  }
}

RunConfig make_config(const InputOptions& opt) {
  RunConfig cfg;
  cfg.inputs.assign(opt.inputs.begin(), opt.inputs.end());
  if (opt.weights != "entropy") {
    cfg.weight_mode = WeightMode::File;
    cfg.weight_file = opt.weights;
  }
  cfg.k = opt.k;
  return cfg;
}

fs::path with_suffix(const fs::path& p, std::string_view tag) {
  fs::path out = p;
  out.replace_filename(p.stem().string() + "_" + std::string(tag) + p.extension().string());
  return out;
}

int report_error(std::ostream& err, std::string_view message, int code) {
  err << "mcdm: " << message << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-criteria ranking with fused TOPSIS-VIKOR compromise scores and AISM hierarchies", "mcdm"};
  app.set_version_flag("--version", std::string("mcdm ") + kVersion);
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.");

  std::function<int()> action;

  // weights
  InputOptions weights_opt;
  std::string weights_format = "text";
  std::string weights_out;
  auto* weights_cmd = app.add_subcommand("weights", "Entropy weights of each criterion");
  add_input_options(*weights_cmd, weights_opt, false, false);
  weights_cmd->add_option("--format", weights_format, "Report format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  weights_cmd->add_option("--out", weights_out, "Write the report to this file instead of stdout");
  weights_cmd->callback([&] {
    action = [&] {
      const DecisionMatrix m = load_decision_matrix(make_config(weights_opt).inputs);
      const EntropyReport report = entropy_weights(normalize(m));
      const std::string text = weights_format == "csv" ? weights_report_csv(report, m.criteria())
                                                       : weights_report_text(report, m.criteria());
      if (weights_out.empty()) {
        out << text;
      } else {
        csv::write_file(weights_out, text);
      }
      return kSuccess;
    };
  });

  // rank
  InputOptions rank_opt;
  std::string rank_out;
  auto* rank_cmd = app.add_subcommand("rank", "Fused TOPSIS-VIKOR compromise ranking");
  add_input_options(*rank_cmd, rank_opt, true);
  rank_cmd->add_option("--out", rank_out, "Directory for metrics.csv and ranking.csv");
  rank_cmd->callback([&] {
    action = [&] {
      const Analysis a = analyze(make_config(rank_opt), err);
      if (!rank_out.empty()) {
        csv::write_file(fs::path(rank_out) / "metrics.csv", metrics_csv(a.metrics, a.sdr));
        csv::write_file(fs::path(rank_out) / "ranking.csv", rank_report_csv(a.fusion));
      }
      out << rank_report_text(a.fusion);
      return kSuccess;
    };
  });

  // aism
  InputOptions aism_opt;
  std::string profile = "sixmetric";
  std::string mode = "both";
  std::string dot_path;
  std::string matrices_dir;
  double aism_eps = 0.0;
  auto* aism_cmd = app.add_subcommand("aism", "Adversarial UP/DOWN hierarchies of one metric profile");
  add_input_options(*aism_cmd, aism_opt, true);
  aism_cmd->add_option("--profile", profile, "Metric profile")
      ->check(CLI::IsMember({"sixmetric", "sdr", "q"}))
      ->capture_default_str();
  aism_cmd->add_option("--mode", mode, "Extraction")
      ->check(CLI::IsMember({"up", "down", "both"}))
      ->capture_default_str();
  aism_cmd->add_option("--dot", dot_path, "Write Graphviz output here (_up/_down suffixes with --mode both)");
  aism_cmd->add_option("--matrices", matrices_dir, "Dump A, B, R, S as 0/1 CSV into this directory");
  aism_cmd->add_option("--dominance-eps", aism_eps, "Absolute slack for dominance comparisons")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  aism_cmd->callback([&] {
    action = [&] {
      const Analysis a = analyze(make_config(aism_opt), err);
      const ProfileKind kind = parse_profile_kind(profile);
      const AismPass pass = run_aism(make_profile(a, kind), aism_eps);
      std::vector<Extraction> modes;
      if (mode != "down") modes.push_back(Extraction::Up);
      if (mode != "up") modes.push_back(Extraction::Down);
      for (Extraction e : modes) {
        out << (e == Extraction::Up ? "UP:   " : "DOWN: ") << format_levels(pass.hierarchy, e) << '\n';
        if (!dot_path.empty()) {
          const fs::path target = modes.size() == 2 ? with_suffix(dot_path, to_string(e)) : fs::path(dot_path);
          csv::write_file(target, to_dot(pass.hierarchy, e, std::string(to_string(kind)) + "_" +
                                                                 std::string(to_string(e))));
        }
      }
      if (!matrices_dir.empty()) write_aism_artifacts(pass, kind, matrices_dir);
      return kSuccess;
    };
  });

  // sensitivity
  InputOptions sens_opt;
  std::string grid_spec = "0:1:0.05";
  double reference = kDefaultAllocation;
  std::string sweep_out;
  auto* sens_cmd = app.add_subcommand("sensitivity", "Sweep the allocation coefficient k");
  add_input_options(*sens_cmd, sens_opt, false);
  sens_cmd->add_option("--k-grid", grid_spec, "start:stop:step, inclusive")->capture_default_str();
  sens_cmd->add_option("--reference", reference, "k against which rank shifts are measured")
      ->capture_default_str();
  sens_cmd->add_option("--out", sweep_out, "Write the long-form sweep CSV here instead of stdout");
  sens_cmd->callback([&] {
    action = [&] {
      const std::vector<double> grid = parse_k_grid(grid_spec);
      RunConfig cfg = make_config(sens_opt);
      cfg.k = reference;
      const Analysis a = analyze(cfg, err);
      const RankTrajectory t = sweep_k(a.sdr, grid);
      const std::vector<int> shift = max_rank_shift(t, reference);
      if (sweep_out.empty()) {
        out << sweep_csv(t);
        return kSuccess;
      }
      csv::write_file(sweep_out, sweep_csv(t));
      out << fmt::format("max rank shift relative to k = {}\n", csv::fixed(reference, 2));
      for (std::size_t i = 0; i < shift.size(); ++i) out << "  " << t.alternatives[i] << ": " << shift[i] << '\n';
      return kSuccess;
    };
  });

  // pipeline
  InputOptions pipe_opt;
  std::string pipe_out;
  double pipe_eps = 0.0;
  std::string pipe_grid = "0:1:0.05";
  double pipe_reference = kDefaultAllocation;
  auto* pipe_cmd = app.add_subcommand("pipeline", "Run every stage and write all artifacts");
  add_input_options(*pipe_cmd, pipe_opt, true);
  pipe_cmd->add_option("--out", pipe_out, "Output directory")->required();
  pipe_cmd->add_option("--dominance-eps", pipe_eps, "Absolute slack for dominance comparisons")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  pipe_cmd->add_option("--k-grid", pipe_grid, "Sensitivity grid start:stop:step")->capture_default_str();
  pipe_cmd->add_option("--reference", pipe_reference, "Reference k for rank shifts")->capture_default_str();
  pipe_cmd->callback([&] {
    action = [&] {
      RunConfig cfg = make_config(pipe_opt);
      cfg.out_dir = pipe_out;
      cfg.dominance_epsilon = pipe_eps;
      cfg.k_grid = parse_k_grid(pipe_grid);
      cfg.reference_k = pipe_reference;
      const PipelineResult r = run_pipeline(cfg, err);
      out << rank_report_text(r.analysis.fusion);
      out << fmt::format("wrote {} files under {}\n", r.written.size(), pipe_out);
      return kSuccess;
    };
  });

  if (args.size() > 1 && !args[1].empty() && args[1].front() != '-' &&
      std::find(kSubcommands.begin(), kSubcommands.end(), args[1]) == kSubcommands.end()) {
    return report_error(err,
                        fmt::format("unknown subcommand '{}'; did you mean '{}'? (see mcdm --help)", args[1],
                                    closest_subcommand(args[1])),
                        kUsageError);
  }

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    // top-level help lists every subcommand with its flags
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help("", CLI::AppFormatMode::All) : subs.back()->help());
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << "mcdm " << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return report_error(err, e.what(), kUsageError);
  }

  try {
    return action ? action() : report_error(err, "no subcommand given", kUsageError);
  } catch (const StageError& e) {
    return report_error(err, e.what(), e.internal() ? kInternalError : kDataError);
  } catch (const InternalError& e) {
    return report_error(err, std::string("internal error: ") + e.what(), kInternalError);
  } catch (const Error& e) {
    return report_error(err, e.what(), kDataError);
  } catch (const std::exception& e) {
    return report_error(err, std::string("internal error: ") + e.what(), kInternalError);
  }
}

}  // namespace mcdm::cli
