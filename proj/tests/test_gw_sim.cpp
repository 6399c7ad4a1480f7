#include <doctest.h>

#include <cmath>

#include "gwmast/error.hpp"
#include "gwmast/exact_formulas.hpp"
#include "gwmast/gw_sim.hpp"
#include "gwmast/power_series.hpp"

using namespace gwmast;

namespace {

const OffspringDistribution kTernary = OffspringDistribution::validate({{0, Rational(2, 3)}, {3, Rational(1, 3)}});
const OffspringDistribution kD2 =
    OffspringDistribution::validate({{0, Rational(7, 12)}, {2, Rational(1, 4)}, {3, Rational(1, 6)}});

SamplerConfig config(const OffspringDistribution& d, std::uint64_t seed) {
  SamplerConfig c;
  c.dist = d;
  c.seed = seed;
  return c;
}

bool within(const McReport& r, double exact, double k) { return std::abs(r.estimate - exact) <= k * r.std_error; }

}  // namespace

TEST_CASE("random helpers") {
  auto a = make_stream(5, 3);
  auto b = make_stream(5, 3);
  auto c = make_stream(5, 4);
  CHECK(a() == b());
  CHECK(a() != c());
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform01(a);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(uniform_below(a, 7) < 7);
  }
  CHECK(uniform_below(a, 1) == 0);
  CHECK(splitmix64(0) != splitmix64(1));
}

TEST_CASE("offspring draws follow the law") {
  OffspringSampler s(kD2);
  auto rng = make_stream(11, 0);
  const int m = 200000;
  std::map<Degree, int> counts;
  for (int i = 0; i < m; ++i) ++counts[s.draw(rng)];
  CHECK(counts.size() == 3);
  for (const auto& [j, p] : kD2.probabilities()) {
    const double pj = p.get_d();
    CHECK(std::abs(counts[j] / double(m) - pj) <= 4 * std::sqrt(pj * (1 - pj) / m));
  }
}

TEST_CASE("terminal trees respect the cap") {
  OffspringSampler s(OffspringDistribution::binary());
  auto rng = make_stream(1, 0);
  int aborted = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto t = sample_terminal(s, 5, rng);
    if (!t) {
      ++aborted;
      continue;
    }
    CHECK(t->vertex_count() <= 5);
  }
  CHECK(aborted > 0);
}

TEST_CASE("unconditioned leaf-count histogram") {
  OffspringSampler s(OffspringDistribution::binary());
  const PowerSeries phi = solve_leaf_gf(OffspringDistribution::binary(), 6);
  const int m = 100000;
  std::vector<int> hist(7, 0);
  auto rng = make_stream(2024, 0);
  for (int i = 0; i < m; ++i) {
    const auto t = sample_terminal(s, 1'000'000, rng);
    if (t && t->leaf_count() <= 6) ++hist[t->leaf_count()];
  }
  for (int k = 1; k <= 6; ++k) {
    const double p = phi[k].get_d();
    CHECK(std::abs(hist[k] / double(m) - p) <= 4 * std::sqrt(p / m));
  }
}

TEST_CASE("conditioned samples") {
  auto cfg = config(kD2, 9);
  auto rng = make_stream(9, 0);
  for (unsigned n : {1u, 2u, 5u, 9u}) {
    const ConditionedSample s = sample_conditioned(cfg, n, rng);
    CHECK(s.tree.leaf_count() == n);
    std::vector<Label> want(n);
    for (unsigned i = 0; i < n; ++i) want[i] = static_cast<Label>(i + 1);
    CHECK(s.tree.label_set() == want);
    CHECK(s.attempts >= 1);
  }
  auto tcfg = config(kTernary, 1);
  try {
    sample_conditioned(tcfg, 2, rng);
    FAIL("expected ImpossibleLeafCount");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ImpossibleLeafCount);
  }
  auto tight = config(OffspringDistribution::binary(), 1);
  tight.max_attempts = 1;
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 50; ++i) sample_conditioned(tight, 30, rng);
      }(),
      Error);
}

TEST_CASE("batches are reproducible") {
  const auto cfg = config(OffspringDistribution::binary(), 77);
  const auto a = sample_conditioned_batch(cfg, 6, 20);
  const auto b = sample_conditioned_batch(cfg, 6, 20);
  CHECK(a == b);
  const auto c = sample_conditioned_batch(config(OffspringDistribution::binary(), 78), 6, 20);
  CHECK(a != c);
}

TEST_CASE("Monte Carlo induced probability") {
  const auto cfg = config(OffspringDistribution::binary(), 314159);
  const McReport cherry = mc_induced_probability(cfg, parse_tree("(1,2)"), 3, 100000, 4);
  CHECK(cherry.trials == 100000);
  CHECK(within(cherry, 0.5, 3));
  const McReport comb = mc_induced_probability(cfg, parse_tree("(1,(2,3))"), 5, 100000, 4);
  CHECK(within(comb, 1.0 / 12, 3));
  const auto dcfg = config(kD2, 2718);
  const double exact = induced_probability(kD2, parse_tree("(1,2)").shape(), 4).conditional.get_d();
  CHECK(within(mc_induced_probability(dcfg, parse_tree("(1,2)"), 4, 100000, 4), exact, 3));
}

TEST_CASE("Monte Carlo does not depend on thread count") {
  const auto cfg = config(kD2, 99);
  const McReport one = mc_induced_probability(cfg, parse_tree("(1,2)"), 5, 3000, 1);
  const McReport many = mc_induced_probability(cfg, parse_tree("(1,2)"), 5, 3000, 7);
  CHECK(one.estimate == many.estimate);
  CHECK(one.std_error == many.std_error);
}

TEST_CASE("Monte Carlo expected common count") {
  const auto cfg = config(OffspringDistribution::binary(), 4242);
  const McReport e2 = mc_expected_common(cfg, 4, 2, 20000, ComparisonMode::Ordered, 4);
  CHECK(within(e2, 3.0, 3));
  const McReport e3 = mc_expected_common(cfg, 4, 3, 20000, ComparisonMode::Ordered, 4);
  CHECK(within(e3, 1.0 / 3, 3));
  const McReport e1 = mc_expected_common(config(kD2, 1), 6, 1, 500, ComparisonMode::Ordered, 2);
  CHECK(e1.estimate == 6.0);
  CHECK(e1.std_error == 0.0);
}
