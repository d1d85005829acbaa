#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "mcdm/error.hpp"
#include "mcdm/vikor.hpp"
#include "support/oracles.hpp"

using namespace mcdm;

namespace {

std::vector<CriterionSpec> dirs(const std::vector<bool>& benefit) {
  std::vector<CriterionSpec> out;
  for (std::size_t j = 0; j < benefit.size(); ++j) {
    out.push_back({"c" + std::to_string(j), "", benefit[j] ? Direction::Benefit : Direction::Cost});
  }
  return out;
}

NormalizedMatrix normalized(const oracle::Rows& rows) { return NormalizedMatrix(Grid::from_rows(rows)); }

UtilityRegretTable table(std::vector<double> s, std::vector<double> r) {
  UtilityRegretTable t;
  t.s_plus = s;
  t.r_plus = r;
  for (double x : s) t.s_minus.push_back(1 - x);
  t.r_minus.assign(r.size(), 0.0);
  return t;
}

}  // namespace

TEST_CASE("best_worst") {
  const auto n = normalized({{0.2, 0.2, 0.5}, {0.9, 0.9, 0.5}});
  const RangeSpec r = best_worst(n, dirs({true, false, true}));
  CHECK(r.best == std::vector<double>{0.9, 0.2, 0.5});
  CHECK(r.worst == std::vector<double>{0.2, 0.9, 0.5});
  CHECK_THROWS_AS(best_worst(n, dirs({true})), ShapeError);
}

TEST_CASE("alternative at the best point everywhere") {
  const auto n = normalized({{0.9, 0.1}, {0.3, 0.6}});
  const auto crit = dirs({true, false});
  const UtilityRegretTable t = utility_regret(n, WeightVector({0.4, 0.6}), best_worst(n, crit));
  CHECK(t.s_plus[0] == 0.0);
  CHECK(t.s_minus[0] == doctest::Approx(1.0));
  CHECK(t.r_plus[0] == 0.0);
}

TEST_CASE("even split of two criteria") {
  const auto n = normalized({{0.1, 0.9}, {0.9, 0.1}});
  const UtilityRegretTable t = utility_regret(n, WeightVector({0.5, 0.5}), best_worst(n, dirs({true, true})));
  CHECK(t.s_plus[0] == doctest::Approx(0.5));
  CHECK(t.s_minus[0] == doctest::Approx(0.5));
  CHECK(t.r_plus[0] == doctest::Approx(0.5));
  CHECK(t.r_minus[0] == doctest::Approx(0.5));
}

TEST_CASE("flat criteria contribute nothing") {
  const auto n = normalized({{0.4, 0.1}, {0.4, 0.7}});
  const UtilityRegretTable t = utility_regret(n, WeightVector({0.5, 0.5}), best_worst(n, dirs({true, true})));
  CHECK(t.s_plus == std::vector<double>{0.5, 0.0});
  CHECK(t.s_minus == std::vector<double>{0.0, 0.5});
  const auto flat = normalized({{0.4}, {0.4}});
  CHECK_THROWS_AS(utility_regret(flat, WeightVector({1.0}), best_worst(flat, dirs({true}))), DegenerateError);
}

TEST_CASE("random instances match the double-loop oracle") {
  std::mt19937_64 rng(4242);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const std::size_t m = 1 + trial % 5;
    const auto rows = oracle::random_rows(rng, n, m, 0.0, 1.0);
    std::vector<bool> benefit(m);
    for (std::size_t j = 0; j < m; ++j) benefit[j] = coin(rng);
    const WeightVector w = WeightVector::normalized(oracle::random_rows(rng, 1, m, 0.01, 1.0)[0]);
    const auto mat = normalized(rows);
    const UtilityRegretTable t = utility_regret(mat, w, best_worst(mat, dirs(benefit)));
    const std::vector<double> wv(w.values().begin(), w.values().end());
    const auto o = oracle::utility_regret(rows, wv, benefit);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(t.s_plus[i] - o.s_plus[i]) < 1e-12);
      CHECK(std::abs(t.s_minus[i] - o.s_minus[i]) < 1e-12);
      CHECK(std::abs(t.r_plus[i] - o.r_plus[i]) < 1e-12);
      CHECK(std::abs(t.r_minus[i] - o.r_minus[i]) < 1e-12);
      CHECK(std::abs(t.s_plus[i] + t.s_minus[i] - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("worsening one value never lowers that alternative's regret") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> step(0.0, 0.3);
  for (int trial = 0; trial < 50; ++trial) {
    auto rows = oracle::random_rows(rng, 5, 3, 0.1, 0.9);
    const auto crit = dirs({true, true, true});
    const WeightVector w({0.2, 0.3, 0.5});
    const auto before = utility_regret(normalized(rows), w, best_worst(normalized(rows), crit));
    const std::size_t i = trial % 5;
    const std::size_t j = trial % 3;
    rows[i][j] -= step(rng);
    const auto after = utility_regret(normalized(rows), w, best_worst(normalized(rows), crit));
    CHECK(after.r_plus[i] >= before.r_plus[i] - 1e-15);
  }
}

TEST_SUITE("classic_q") {
  TEST_CASE("direct substitution") {
    const auto q = classic_q(table({0, 0.5, 1}, {0, 1, 0.5}), 0.5);
    CHECK(q[0] == doctest::Approx(0.0));
    CHECK(q[1] == doctest::Approx(0.75));
    CHECK(q[2] == doctest::Approx(0.75));
  }

  TEST_CASE("double minimum and double maximum") {
    const auto q = classic_q(table({0.1, 0.4, 0.9}, {0.05, 0.3, 0.6}));
    CHECK(q[0] == 0.0);
    CHECK(q[2] == doctest::Approx(1.0));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(classic_q(table({0.1, 0.4}, {0.1, 0.3}), 1.5), RangeError);
    CHECK_THROWS_AS(classic_q(table({0.1, 0.4}, {0.1, 0.3}), -0.1), RangeError);
    try {
      classic_q(table({0.3, 0.3}, {0.1, 0.2}));
      FAIL("expected DegenerateError");
    } catch (const DegenerateError& e) {
      CHECK(std::string(e.what()).find("S+") != std::string::npos);
    }
    try {
      classic_q(table({0.1, 0.3}, {0.2, 0.2}));
      FAIL("expected DegenerateError");
    } catch (const DegenerateError& e) {
      CHECK(std::string(e.what()).find("R+") != std::string::npos);
    }
  }

  TEST_CASE("argmin survives affine rescaling") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> s(6), r(6);
      for (auto& x : s) x = u(rng);
      for (auto& x : r) x = u(rng);
      const double k = u(rng);
      const auto q = classic_q(table(s, r), k);
      std::vector<double> s2 = s;
      for (auto& x : s2) x = 3.5 * x + 0.25;
      const auto q2 = classic_q(table(s2, r), k);
      CHECK(std::min_element(q.begin(), q.end()) - q.begin() == std::min_element(q2.begin(), q2.end()) - q2.begin());
    }
  }
}
