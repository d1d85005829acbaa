#include <optional>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mcdm/cli.hpp"
#include "mcdm/pipeline.hpp"

namespace py = pybind11;
using namespace mcdm;

namespace {

Grid grid_of(const std::vector<std::vector<double>>& rows) { return Grid::from_rows(rows); }

std::vector<std::vector<double>> rows_of(const Grid& g) { return g.to_rows(); }

std::vector<double> as_vector(const WeightVector& w) { return {w.values().begin(), w.values().end()}; }

void bind_errors(py::module_& m) {
  // translators run newest first, so the base class goes in before its subclasses
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<DuplicateIdError>(m, "DuplicateIdError", base);
  py::register_exception<EmptyInputError>(m, "EmptyInputError", base);
  py::register_exception<ShapeError>(m, "ShapeError", base);
  py::register_exception<RangeError>(m, "RangeError", base);
  py::register_exception<DegenerateError>(m, "DegenerateError", base);
  py::register_exception<CycleError>(m, "CycleError", base);
  py::register_exception<NotFoundError>(m, "NotFoundError", base);
  py::register_exception<IoError>(m, "IoError", base);
  py::register_exception<InternalError>(m, "InternalError", base);
  py::register_exception<StageError>(m, "StageError", base);
}

void bind_model(py::module_& m) {
  py::enum_<Direction>(m, "Direction").value("Benefit", Direction::Benefit).value("Cost", Direction::Cost);

  py::class_<CriterionSpec>(m, "CriterionSpec")
      .def(py::init([](std::string id, Direction d) { return CriterionSpec{id, id, d}; }), py::arg("id"),
           py::arg("direction") = Direction::Benefit)
      .def_readonly("id", &CriterionSpec::id)
      .def_readonly("direction", &CriterionSpec::direction)
      .def("__repr__", [](const CriterionSpec& c) {
        return "CriterionSpec('" + c.id + "', " + std::string(to_string(c.direction)) + ")";
      });

  py::class_<DecisionMatrix>(m, "DecisionMatrix")
      .def(py::init([](std::vector<std::string> alternatives, std::vector<CriterionSpec> criteria,
                       const std::vector<std::vector<double>>& values) {
             return DecisionMatrix(std::move(alternatives), std::move(criteria), grid_of(values));
           }),
           py::arg("alternatives"), py::arg("criteria"), py::arg("values"))
      .def_property_readonly("alternatives", &DecisionMatrix::alternatives)
      .def_property_readonly("criteria", &DecisionMatrix::criteria)
      .def_property_readonly("values", [](const DecisionMatrix& d) { return rows_of(d.values()); })
      .def_property_readonly("shape", [](const DecisionMatrix& d) { return py::make_tuple(d.rows(), d.cols()); })
      .def("to_csv", [](const DecisionMatrix& d) { return to_csv(d); });

  m.def("parse_decision_matrix", &parse_decision_matrix, py::arg("csv_text"));
  m.def("aggregate_questionnaires",
        [](const std::vector<DecisionMatrix>& sheets) { return aggregate_questionnaires(sheets); },
        py::arg("sheets"));
  m.def("load_decision_matrix", &load_decision_matrix, py::arg("paths"));
  m.def("normalize", [](const DecisionMatrix& d) { return rows_of(normalize(d).values()); }, py::arg("matrix"));
}

void bind_weights(py::module_& m) {
  py::class_<EntropyReport>(m, "EntropyReport")
      .def_property_readonly("rho", [](const EntropyReport& r) { return rows_of(r.rho); })
      .def_readonly("entropy", &EntropyReport::entropy)
      .def_readonly("variation", &EntropyReport::variation)
      .def_property_readonly("weights", [](const EntropyReport& r) { return as_vector(r.weights); });

  m.def(
      "entropy_weights",
      [](const std::vector<std::vector<double>>& normalized) {
        return entropy_weights(NormalizedMatrix(grid_of(normalized)));
      },
      py::arg("normalized"));
  m.def(
      "parse_weight_file",
      [](std::string_view text, const std::vector<CriterionSpec>& criteria) {
        const ExplicitWeights w = parse_weight_file(text, criteria);
        return py::make_tuple(as_vector(w.weights), w.renormalized);
      },
      py::arg("csv_text"), py::arg("criteria"));
}

void bind_fusion(py::module_& m) {
  py::class_<MetricTable>(m, "MetricTable")
      .def(py::init([](std::vector<std::string> ids, std::vector<double> d_plus, std::vector<double> d_minus,
                       std::vector<double> s_plus, std::vector<double> s_minus, std::vector<double> r_plus,
                       std::vector<double> r_minus) {
             return make_metric_table(std::move(ids), {std::move(d_plus), std::move(d_minus)},
                                      {std::move(s_plus), std::move(s_minus), std::move(r_plus), std::move(r_minus)});
           }),
           py::arg("alternatives"), py::arg("d_plus"), py::arg("d_minus"), py::arg("s_plus"), py::arg("s_minus"),
           py::arg("r_plus"), py::arg("r_minus"))
      .def_readonly("alternatives", &MetricTable::alternatives)
      .def_property_readonly("d_plus", [](const MetricTable& t) { return t.separation.d_plus; })
      .def_property_readonly("d_minus", [](const MetricTable& t) { return t.separation.d_minus; })
      .def_property_readonly("s_plus", [](const MetricTable& t) { return t.utility.s_plus; })
      .def_property_readonly("s_minus", [](const MetricTable& t) { return t.utility.s_minus; })
      .def_property_readonly("r_plus", [](const MetricTable& t) { return t.utility.r_plus; })
      .def_property_readonly("r_minus", [](const MetricTable& t) { return t.utility.r_minus; })
      .def("__len__", &MetricTable::size);

  py::class_<SdrTable>(m, "SdrTable")
      .def_readonly("alternatives", &SdrTable::alternatives)
      .def_readonly("plus", &SdrTable::plus)
      .def_readonly("minus", &SdrTable::minus)
      .def("__len__", &SdrTable::size);

  py::class_<FusionTable>(m, "FusionTable")
      .def_readonly("alternatives", &FusionTable::alternatives)
      .def_readonly("sdr_plus", &FusionTable::sdr_plus)
      .def_readonly("sdr_minus", &FusionTable::sdr_minus)
      .def_readonly("a", &FusionTable::a)
      .def_readonly("b", &FusionTable::b)
      .def_readonly("q", &FusionTable::q)
      .def_readonly("rank", &FusionTable::rank)
      .def_readonly("tied", &FusionTable::tied)
      .def_readonly("k", &FusionTable::k)
      .def("to_csv", [](const FusionTable& t) { return rank_report_csv(t); })
      .def("__len__", &FusionTable::size);

  m.def("analyze_matrix", [](const DecisionMatrix& d, const std::vector<double>& weights) {
    const NormalizedMatrix n = normalize(d);
    const WeightVector w = weights.empty() ? entropy_weights(n).weights : WeightVector(weights);
    const WeightedMatrix t = apply_weights(n, w);
    return make_metric_table(d.alternatives(), separations(t, ideal_solutions(t, d.criteria())),
                             utility_regret(n, w, best_worst(n, d.criteria())));
  }, py::arg("matrix"), py::arg("weights") = std::vector<double>{},
     "TOPSIS separations and VIKOR utility/regret; entropy weights when none are given.");
  m.def("parse_metric_table", &parse_metric_table, py::arg("csv_text"));
  m.def("sdr_means", py::overload_cast<const MetricTable&>(&sdr_means), py::arg("metrics"));
  m.def("compromise", &compromise, py::arg("sdr"), py::arg("k") = kDefaultAllocation);
}

void bind_aism(py::module_& m) {
  py::enum_<ProfileKind>(m, "ProfileKind")
      .value("SixMetric", ProfileKind::SixMetric)
      .value("Sdr", ProfileKind::Sdr)
      .value("Q", ProfileKind::Q);
  py::enum_<Extraction>(m, "Extraction").value("Up", Extraction::Up).value("Down", Extraction::Down);

  py::class_<CriteriaProfile>(m, "CriteriaProfile")
      .def_property_readonly("alternatives", &CriteriaProfile::alternatives)
      .def_property_readonly("columns", [](const CriteriaProfile& p) {
        std::vector<std::string> names;
        for (const auto& c : p.columns()) names.push_back(c.name);
        return names;
      })
      .def_property_readonly("values", [](const CriteriaProfile& p) { return rows_of(p.values()); });

  m.def("six_metric_profile", &six_metric_profile, py::arg("metrics"));
  m.def("sdr_profile", &sdr_profile, py::arg("sdr"));
  m.def("q_profile", &q_profile, py::arg("fusion"));

  py::class_<HierarchyResult>(m, "HierarchyResult")
      .def_readonly("labels", &HierarchyResult::labels)
      .def_readonly("up_levels", &HierarchyResult::up_levels)
      .def_readonly("down_levels", &HierarchyResult::down_levels)
      .def_property_readonly("groups", [](const HierarchyResult& h) { return h.condensation.members; })
      .def_property_readonly("skeleton", [](const HierarchyResult& h) { return h.skeleton.to_rows(); })
      .def_property_readonly("general_skeleton",
                             [](const HierarchyResult& h) { return h.general_skeleton.to_rows(); })
      .def("to_dot", &to_dot, py::arg("mode"), py::arg("graph_name") = "aism")
      .def("format_levels", &format_levels, py::arg("mode"));

  py::class_<AismPass>(m, "AismPass")
      .def_property_readonly("adjacency", [](const AismPass& p) { return p.adjacency.to_rows(); })
      .def_property_readonly("reachable", [](const AismPass& p) { return p.reachable.to_rows(); })
      .def_readonly("hierarchy", &AismPass::hierarchy);

  m.def("run_aism", &run_aism, py::arg("profile"), py::arg("epsilon") = 0.0);

  using Rows = std::vector<std::vector<int>>;
  m.def("reachability", [](const Rows& a) { return reachability(BooleanMatrix::from_rows(a)).to_rows(); },
        py::arg("adjacency"));
  m.def("skeleton", [](const Rows& r) { return skeleton(BooleanMatrix::from_rows(r)).to_rows(); },
        py::arg("closure"));
  m.def("extract_levels",
        [](const Rows& r, Extraction mode) { return extract_levels(BooleanMatrix::from_rows(r), mode); },
        py::arg("closure"), py::arg("mode"));
  m.def(
      "build_hierarchy",
      [](const Rows& r, std::vector<std::string> labels) {
        return build_hierarchy(BooleanMatrix::from_rows(r), std::move(labels));
      },
      py::arg("closure"), py::arg("labels"));
}

void bind_sensitivity(py::module_& m) {
  py::class_<RankTrajectory>(m, "RankTrajectory")
      .def_readonly("alternatives", &RankTrajectory::alternatives)
      .def_readonly("grid", &RankTrajectory::grid)
      .def_readonly("ranks", &RankTrajectory::ranks)
      .def_readonly("q", &RankTrajectory::q)
      .def("to_csv", [](const RankTrajectory& t) { return sweep_csv(t); });

  m.def("sweep_k", [](const SdrTable& s, const std::vector<double>& grid) { return sweep_k(s, grid); },
        py::arg("sdr"), py::arg("grid"));
  m.def("max_rank_shift", &max_rank_shift, py::arg("trajectory"), py::arg("reference_k"));
  m.def("parse_k_grid", &parse_k_grid, py::arg("spec"));
  m.def("default_k_grid", &default_k_grid);
}

void bind_pipeline(py::module_& m) {
  m.def(
      "run_pipeline",
      [](const std::vector<std::filesystem::path>& inputs, const std::filesystem::path& out_dir,
         std::optional<std::filesystem::path> weight_file, double k, double dominance_epsilon) {
        RunConfig cfg;
        cfg.inputs = inputs;
        cfg.out_dir = out_dir;
        if (weight_file) {
          cfg.weight_mode = WeightMode::File;
          cfg.weight_file = *weight_file;
        }
        cfg.k = k;
        cfg.dominance_epsilon = dominance_epsilon;
        std::ostringstream log;
        const PipelineResult r = run_pipeline(cfg, log);
        std::vector<std::string> written;
        for (const auto& p : r.written) written.push_back(p.string());
        return py::make_tuple(r.analysis.fusion, written, log.str());
      },
      py::arg("inputs"), py::arg("out_dir"), py::arg("weight_file") = py::none(), py::arg("k") = kDefaultAllocation,
      py::arg("dominance_epsilon") = 0.0,
      "Runs every stage, writes all artifacts and returns (fusion, written_paths, log).");

  m.def(
      "cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "mcdm");
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process and returns (exit_code, stdout, stderr).");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fused TOPSIS-VIKOR ranking and AISM hierarchies";
  m.attr("__version__") = cli::kVersion;
  bind_errors(m);
  bind_model(m);
  bind_weights(m);
  bind_fusion(m);
  bind_aism(m);
  bind_sensitivity(m);
  bind_pipeline(m);
}
