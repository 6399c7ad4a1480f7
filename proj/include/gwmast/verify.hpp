#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Oracle-versus-formula suites driven by the `verify` subcommand.
namespace gwmast::verify {

struct Mismatch {
  std::string what;
  std::string expected;
  std::string actual;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

struct SuiteOptions {
  unsigned max_n = 7;            // lemma1: hosts up to this many leaves
  std::size_t trials = 100'000;  // mc
  std::uint64_t seed = 20240607;
  unsigned threads = 0;
};

// Host counts of every rooted shape with 2..4 leaves against (2n-5)!!/(2a-3)!!.
SuiteResult lemma1(const SuiteOptions& opt);
// F(b,k) three ways and the attached-forest sum identity.
SuiteResult forests(const SuiteOptions& opt);
// Weight sums over plane trees against the leaf generating function.
SuiteResult weights(const SuiteOptions& opt);
// Conditional induced probability 1/(2^(a-1)(2a-3)!!) for binary trees, plus
// the exhaustive labelled-outcome oracle for every built-in distribution.
SuiteResult binary_law(const SuiteOptions& opt);
// E[X_{n,a}] against the closed forms (binary branching and uniform unrooted).
SuiteResult expectations(const SuiteOptions& opt);
// Monte Carlo induced probabilities within 4 standard errors of exact values.
SuiteResult monte_carlo(const SuiteOptions& opt);

std::vector<std::string> suite_names();
// Throws DomainError for an unknown name; "all" runs every suite.
std::vector<SuiteResult> run(const std::string& name, const SuiteOptions& opt);

}  // namespace gwmast::verify
