#include "gwmast/verify.hpp"

#include <cmath>
#include <sstream>

#include "gwmast/agreement.hpp"
#include "gwmast/cli.hpp"
#include "gwmast/error.hpp"
#include "gwmast/exact_formulas.hpp"
#include "gwmast/gw_sim.hpp"
#include "gwmast/oracle.hpp"
#include "gwmast/power_series.hpp"

namespace gwmast::verify {

namespace {

template <class A, class B>
void expect_equal(SuiteResult& r, const std::string& what, const A& expected, const B& actual) {
  ++r.checks;
  if (expected == actual) return;
  std::ostringstream e, a;
  e << expected;
  a << actual;
  r.mismatches.push_back({what, e.str(), a.str()});
}

std::vector<Label> iota_labels(unsigned a) {
  std::vector<Label> s(a);
  for (unsigned i = 0; i < a; ++i) s[i] = static_cast<Label>(i + 1);
  return s;
}

}  // namespace

SuiteResult lemma1(const SuiteOptions& opt) {
  SuiteResult r{"lemma1", 0, {}};
  for (unsigned a = 2; a <= 4; ++a) {
    const auto shapes = oracle::all_rooted_binary(iota_labels(a));
    for (unsigned n = a + 1; n <= opt.max_n; ++n) {
      const BigInt want = unrooted_host_count(n, a);
      for (const auto& shape : shapes) {
        expect_equal(r, "hosts of " + serialize(shape) + " in n=" + std::to_string(n), want,
                     BigInt(std::to_string(oracle::brute_host_count(shape, n))));
      }
    }
  }
  return r;
}

SuiteResult forests(const SuiteOptions&) {
  SuiteResult r{"forests", 0, {}};
  constexpr unsigned kMaxB = 7;
  const PowerSeries b_series = binary_forest_gf(kMaxB);
  PowerSeries b_power = PowerSeries::constant(1, kMaxB);
  for (unsigned k = 1; k <= kMaxB; ++k) {
    b_power = b_power * b_series;
    for (unsigned b = k; b <= kMaxB; ++b) {
      const BigInt f = forest_count(b, k);
      const std::string tag = "F(" + std::to_string(b) + "," + std::to_string(k) + ")";
      expect_equal(r, tag + " vs b![x^b]B^k", Rational(f), Rational(b_power[b] * factorial(b)));
      expect_equal(r, tag + " vs enumeration", f, BigInt(std::to_string(oracle::count_ordered_forests(b, k))));
    }
  }
  for (unsigned a = 2; a <= 5; ++a) {
    const PowerSeries target = binomial_series(-Rational(a - 1), -2, kMaxB);
    for (unsigned b = 1; b <= kMaxB; ++b) {
      BigInt sum = 0;
      for (unsigned k = 1; k <= b; ++k) sum += attached_forest_count(b, k, a);
      expect_equal(r, "sum_k attached(b=" + std::to_string(b) + ",a=" + std::to_string(a) + ")",
                   Rational(target[b] * factorial(b)), Rational(sum));
    }
  }
  return r;
}

SuiteResult weights(const SuiteOptions&) {
  SuiteResult r{"weights", 0, {}};
  for (const auto& name : cli::builtin_distribution_names()) {
    const auto dist = cli::named_distribution(name);
    const PowerSeries phi = solve_leaf_gf(dist, 8);
    for (unsigned k = 1; k <= 8; ++k) {
      expect_equal(r, name + " [y^" + std::to_string(k) + "]Phi", phi[k], oracle::leaf_count_mass(dist, k));
    }
  }
  return r;
}

SuiteResult binary_law(const SuiteOptions&) {
  SuiteResult r{"binary-law", 0, {}};
  const auto binary = OffspringDistribution::binary();
  for (unsigned n = 2; n <= 12; ++n) {
    InducedProbabilityModel model(binary, n);
    for (unsigned a = 1; a <= std::min(5u, n - 1); ++a) {
      BigInt den = double_factorial(2l * a - 3);
      den *= BigInt(1) << (a - 1);
      const Rational want(1, den);
      for (const auto& shape : enumerate_shapes(a, 2)) {
        expect_equal(r, "binary n=" + std::to_string(n) + " a=" + std::to_string(a), want,
                     model.evaluate(shape).conditional);
      }
    }
  }
  // Exhaustive labelled-outcome check of the general formula on small hosts.
  for (const auto& name : cli::builtin_distribution_names()) {
    const auto dist = cli::named_distribution(name);
    for (unsigned n = 2; n <= 6; ++n) {
      if (sgn(solve_leaf_gf(dist, n)[n]) == 0) continue;
      for (unsigned a = 1; a <= std::min(3u, n); ++a) {
        InducedProbabilityModel model(dist, n);
        for (const auto& shape : enumerate_shapes(a, dist.max_degree())) {
          const LabelledTree labelled(shape, iota_labels(a));
          expect_equal(r, name + " n=" + std::to_string(n) + " " + serialize(labelled),
                       oracle::brute_induced_probability(dist, labelled, n), model.evaluate(shape).conditional);
        }
      }
    }
  }
  return r;
}

SuiteResult expectations(const SuiteOptions&) {
  SuiteResult r{"expect", 0, {}};
  const auto binary = OffspringDistribution::binary();
  for (unsigned n = 2; n <= 12; ++n) {
    for (unsigned a = 1; a <= std::min(5u, n); ++a) {
      expect_equal(r, "E[X] binary n=" + std::to_string(n) + " a=" + std::to_string(a),
                   expected_common_binary_closed_form(n, a), expected_common_gw(binary, n, a));
    }
  }
  for (unsigned n = 4; n <= 6; ++n) {
    for (unsigned a = 2; a < n; ++a) {
      expect_equal(r, "E[X] unrooted n=" + std::to_string(n) + " a=" + std::to_string(a),
                   expected_common_unrooted(n, a), oracle::brute_expected_common_unrooted(n, a));
    }
  }
  return r;
}

SuiteResult monte_carlo(const SuiteOptions& opt) {
  SuiteResult r{"mc", 0, {}};
  struct Case {
    std::string dist;
    unsigned n;
  };
  for (const Case& c : {Case{"binary", 3}, Case{"d2test", 4}}) {
    SamplerConfig cfg;
    cfg.dist = cli::named_distribution(c.dist);
    cfg.seed = opt.seed;
    const LabelledTree cherry = parse_tree("(1,2)");
    const double exact = induced_probability(cfg.dist, cherry.shape(), c.n).conditional.get_d();
    const McReport rep = mc_induced_probability(cfg, cherry, c.n, opt.trials, opt.threads);
    ++r.checks;
    if (std::abs(rep.estimate - exact) > 4.0 * rep.std_error) {
      r.mismatches.push_back({c.dist + " cherry n=" + std::to_string(c.n) + " (4 stderr)", std::to_string(exact),
                              std::to_string(rep.estimate) + " +- " + std::to_string(rep.std_error)});
    }
  }
  return r;
}

std::vector<std::string> suite_names() { return {"lemma1", "forests", "weights", "binary-law", "expect", "mc"}; }

std::vector<SuiteResult> run(const std::string& name, const SuiteOptions& opt) {
  std::vector<SuiteResult> out;
  auto want = [&](const char* s) { return name == "all" || name == s; };
  if (want("lemma1")) out.push_back(lemma1(opt));
  if (want("forests")) out.push_back(forests(opt));
  if (want("weights")) out.push_back(weights(opt));
  if (want("binary-law")) out.push_back(binary_law(opt));
  if (want("expect")) out.push_back(expectations(opt));
  if (want("mc")) out.push_back(monte_carlo(opt));
  if (out.empty()) throw Error(ErrorCode::DomainError, "unknown suite '" + name + "'");
  return out;
}

}  // namespace gwmast::verify
