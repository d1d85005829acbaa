// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include <fmt/format.h>

#include "mcdm/aism.hpp"
#include "mcdm/csv.hpp"
#include "mcdm/pipeline.hpp"
#include "mcdm/sensitivity.hpp"
#include "mcdm/vikor.hpp"
#include "mcdm/weights.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace mcdm;
using namespace case_study;

namespace {

constexpr double kSdrTol = 1e-3;
constexpr double kTableTol = 1e-3;
constexpr double kSingaporeQTol = 1e-4;
constexpr double kPropertyTol = 1e-9;
constexpr int kMaxShift = 1;
constexpr int kInstances = 100;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Records the first failing observation; later ones are counted.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome result(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    return {false, fmt::format("{} failure(s); first: {}", failures_, first_)};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

Outcome ac1_sdr() {
  const SdrTable s = sdr_means(fixtures::airline_metrics());
  Check c;
  double worst = 0.0;
  for (std::size_t i = 0; i < kAirlines.size(); ++i) {
    for (int side = 0; side < 2; ++side) {
      const double got = side == 0 ? s.plus[i] : s.minus[i];
      const double err = std::abs(got - kSdr[i][side]);
      worst = std::max(worst, err);
      c.expect(err <= kSdrTol, fmt::format("{} SDR{} = {:.6f}, table {:.4f}", kAirlines[i], side ? '-' : '+', got,
                                           kSdr[i][side]));
    }
  }
  return c.result(fmt::format("20 SDR values, max |diff| {:.1e} <= {:.0e}", worst, kSdrTol));
}

Outcome ac2_compromise() {
  const FusionTable f = compromise(sdr_means(fixtures::airline_metrics()), 0.5);
  Check c;
  double worst = 0.0;
  for (std::size_t i = 0; i < kAirlines.size(); ++i) {
    const auto& row = kRanking[i];
    for (const auto& [got, want, name] : {std::tuple{f.a[i], row.a, "a"}, std::tuple{f.b[i], row.b, "b"},
                                          std::tuple{f.q[i], row.q, "Q"}}) {
      worst = std::max(worst, std::abs(got - want));
      c.expect(std::abs(got - want) <= kTableTol, fmt::format("{} {} = {:.6f}, table {}", kAirlines[i], name, got, want));
    }
    c.expect(f.rank[i] == row.rank, fmt::format("{} rank {} vs {}", kAirlines[i], f.rank[i], row.rank));
  }
  const double singapore = std::abs(f.q[Singapore] - kRanking[Singapore].q);
  c.expect(singapore <= kSingaporeQTol, fmt::format("Singapore Q off by {:.2e}", singapore));
  return c.result(fmt::format("a, b, Q max |diff| {:.1e}; Singapore Q |diff| {:.1e}; ranks exact", worst, singapore));
}

Outcome matrix_pass(const CriteriaProfile& profile, const Bits& a, const Bits& r, const Bits& s) {
  const AismPass pass = run_aism(profile);
  Check c;
  c.expect(pass.adjacency == fixtures::bits(a), "adjacency differs");
  c.expect(pass.reachable == fixtures::bits(r), "reachability differs");
  c.expect(pass.reachable == multiplicative_adjacency(pass.adjacency), "R != A | I");
  c.expect(pass.hierarchy.skeleton == fixtures::bits(s), "skeleton differs");
  c.expect(pass.hierarchy.general_skeleton == fixtures::bits(s), "expanded skeleton differs");
  return c.result(fmt::format("A, R, S bit-exact ({} / {} / {} ones)", pass.adjacency.count(), pass.reachable.count(),
                              pass.hierarchy.skeleton.count()));
}

Outcome ac3_pass1() { return matrix_pass(six_metric_profile(fixtures::airline_metrics()), kA1, kR1, kS1); }

Outcome ac4_pass2() {
  const SdrTable s = sdr_means(fixtures::airline_metrics());
  Outcome o = matrix_pass(sdr_profile(s), kA2, kR2, kS2);
  const bool margin_edge = dominance_adjacency(sdr_profile(s))(Swiss, Singapore);
  if (!margin_edge) return {false, "Swiss -> Singapore edge missing"};
  if (o.pass) o.detail += "; Swiss -> Singapore present";
  return o;
}

Outcome ac5_pass3() {
  const FusionTable f = compromise(sdr_means(fixtures::airline_metrics()), 0.5);
  return matrix_pass(q_profile(f), kA3, kR3, kS3);
}

Outcome ac6_levels() {
  const MetricTable m = fixtures::airline_metrics();
  const AismPass p1 = run_aism(six_metric_profile(m));
  const AismPass p3 = run_aism(q_profile(compromise(sdr_means(m), 0.5)));
  Check c;
  c.expect(fixtures::as_sets(p1.hierarchy.up_levels) == fixtures::as_sets(kUpLevelsPass1), "pass-1 UP levels");
  c.expect(fixtures::as_sets(p1.hierarchy.down_levels) == fixtures::as_sets(kDownLevelsPass1), "pass-1 DOWN levels");
  std::vector<std::vector<int>> chain;
  for (int airline : kFinalOrder) chain.push_back({airline});
  c.expect(fixtures::as_sets(p3.hierarchy.up_levels) == fixtures::as_sets(chain), "pass-3 UP chain");
  return c.result(fmt::format("pass 1 UP {} levels, DOWN {} levels; pass 3 UP {}-level chain",
                              p1.hierarchy.up_levels.size(), p1.hierarchy.down_levels.size(),
                              p3.hierarchy.up_levels.size()));
}

Outcome ac7_sensitivity() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  const RankTrajectory t = sweep_k(sdr_means(fixtures::airline_metrics()), grid);
  const std::vector<int> shift = max_rank_shift(t, 0.5);
  Check c;
  for (std::size_t i = 0; i < shift.size(); ++i) {
    c.expect(shift[i] <= kMaxShift, fmt::format("{} moves {} places", kAirlines[i], shift[i]));
  }
  return c.result(fmt::format("11-point grid, max shift {} <= {}", *std::max_element(shift.begin(), shift.end()),
                              kMaxShift));
}

Outcome ac8a_entropy() {
  std::mt19937_64 rng(801);
  Check c;
  double worst = 0.0;
  for (int trial = 0; trial < kInstances; ++trial) {
    const auto rows = oracle::random_rows(rng, 2 + trial % 12, 1 + trial % 9, 0.0, 1.0);
    const EntropyReport r = entropy_weights(NormalizedMatrix(Grid::from_rows(rows)));
    const auto expected = oracle::entropy_weights(rows);
    double sum = 0.0;
    for (std::size_t j = 0; j < expected.size(); ++j) {
      worst = std::max(worst, std::abs(r.weights[j] - expected[j]));
      c.expect(std::abs(r.weights[j] - expected[j]) <= kPropertyTol, fmt::format("instance {} weight {}", trial, j));
      sum += r.weights[j];
    }
    c.expect(std::abs(sum - 1.0) <= kPropertyTol, fmt::format("instance {} sums to {}", trial, sum));
  }
  return c.result(fmt::format("{} matrices, max |w - oracle| {:.1e}", kInstances, worst));
}

Outcome ac8b_utility_sum() {
  std::mt19937_64 rng(802);
  Check c;
  double worst = 0.0;
  for (int trial = 0; trial < kInstances; ++trial) {
    const std::size_t m = 1 + trial % 8;
    const auto rows = oracle::random_rows(rng, 2 + trial % 10, m, 0.0, 1.0);
    const NormalizedMatrix n(Grid::from_rows(rows));
    std::vector<CriterionSpec> crit;
    for (std::size_t j = 0; j < m; ++j)
      crit.push_back({"c" + std::to_string(j), "", j % 2 ? Direction::Cost : Direction::Benefit});
    const WeightVector w = WeightVector::normalized(oracle::random_rows(rng, 1, m, 0.01, 1.0)[0]);
    const auto t = utility_regret(n, w, best_worst(n, crit));
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double err = std::abs(t.s_plus[i] + t.s_minus[i] - 1.0);
      worst = std::max(worst, err);
      c.expect(err <= kPropertyTol, fmt::format("instance {} row {}", trial, i));
    }
  }
  return c.result(fmt::format("{} instances, max |S+ + S- - 1| {:.1e}", kInstances, worst));
}

Outcome ac8c_round_trip() {
  std::mt19937_64 rng(803);
  Check c;
  for (int trial = 0; trial < kInstances; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto closed = fixtures::bits(oracle::random_dag_closure(rng, n, 0.1 + 0.1 * (trial % 6)));
    c.expect(reachability(skeleton(closed)) == closed, fmt::format("instance {} (order {})", trial, n));
  }
  return c.result(fmt::format("{} DAG closures up to order 12", kInstances));
}

Outcome ac8d_dominance() {
  std::mt19937_64 rng(804);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> coarse(0, 3);
  Check c;
  for (int trial = 0; trial < kInstances; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const std::size_t cols = 1 + trial % 6;
    auto rows = oracle::random_rows(rng, n, cols, 0.0, 1.0);
    if (trial % 2)
      for (auto& row : rows)
        for (auto& x : row) x = coarse(rng);
    std::vector<bool> smaller(cols);
    std::vector<ProfileColumn> spec;
    for (std::size_t j = 0; j < cols; ++j) {
      smaller[j] = coin(rng);
      spec.push_back({"m" + std::to_string(j), smaller[j] ? Preference::SmallerBetter : Preference::LargerBetter});
    }
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
    const auto a = dominance_adjacency(CriteriaProfile(ids, spec, Grid::from_rows(rows)));
    c.expect(a.to_rows() == oracle::dominance(rows, smaller), fmt::format("instance {} ({}x{})", trial, n, cols));
  }
  return c.result(fmt::format("{} profiles up to 10x6", kInstances));
}

Outcome ac8e_partitions() {
  std::mt19937_64 rng(805);
  Check c;
  auto universe = [](const Levels& levels) {
    std::vector<std::size_t> all;
    for (const auto& l : levels) all.insert(all.end(), l.begin(), l.end());
    std::sort(all.begin(), all.end());
    return all;
  };
  for (int trial = 0; trial < kInstances; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto closed = fixtures::bits(oracle::random_dag_closure(rng, n, 0.1 + 0.1 * (trial % 6)));
    const Levels up = extract_levels(closed, Extraction::Up);
    const Levels down = extract_levels(closed, Extraction::Down);
    std::vector<std::size_t> expected(n);
    for (std::size_t i = 0; i < n; ++i) expected[i] = i;
    c.expect(universe(up) == expected, fmt::format("instance {}: UP is not a partition", trial));
    c.expect(universe(down) == expected, fmt::format("instance {}: DOWN is not a partition", trial));
    c.expect(up.size() == down.size(), fmt::format("instance {}: {} UP vs {} DOWN levels", trial, up.size(),
                                                   down.size()));
  }
  return c.result(fmt::format("{} closures: both extractions partition the same nodes into equally many levels",
                              kInstances));
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) files[fs::relative(entry.path(), dir).string()] = csv::read_file(entry.path());
  }
  return files;
}

Outcome ac8f_determinism() {
  const fs::path data = MCDM_DATA_DIR;
  const fs::path root = fs::temp_directory_path() / fmt::format("mcdm_acceptance_{}", std::random_device{}());
  Check c;
  std::size_t files = 0;
  for (const fs::path& input : {data / "airline_metrics.csv", data / "airline_scores_example.csv"}) {
    std::vector<std::map<std::string, std::string>> runs;
    for (int run = 0; run < 2; ++run) {
      RunConfig cfg;
      cfg.inputs = {input};
      cfg.out_dir = root / fmt::format("{}_{}", input.stem().string(), run);
      std::ostringstream log;
      run_pipeline(cfg, log);
      runs.push_back(snapshot(cfg.out_dir));
    }
    files += runs[0].size();
    c.expect(!runs[0].empty() && runs[0] == runs[1], input.filename().string() + " outputs differ between runs");
  }
  std::error_code ec;
  fs::remove_all(root, ec);
  return c.result(fmt::format("two runs on each bundled input, {} files byte-identical", files));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1  SDR reproduction", ac1_sdr},
      {"AC2  compromise reproduction", ac2_compromise},
      {"AC3  pass-1 matrices", ac3_pass1},
      {"AC4  pass-2 matrices", ac4_pass2},
      {"AC5  pass-3 matrices", ac5_pass3},
      {"AC6  hierarchy enumerations", ac6_levels},
      {"AC7  sensitivity bound", ac7_sensitivity},
      {"AC8a entropy oracle", ac8a_entropy},
      {"AC8b utility complement", ac8b_utility_sum},
      {"AC8c skeleton/closure round trip", ac8c_round_trip},
      {"AC8d dominance oracle", ac8d_dominance},
      {"AC8e UP/DOWN partitions", ac8e_partitions},
      {"AC8f pipeline determinism", ac8f_determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << fmt::format("{:<34}", name) << o.detail << '\n';
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
