#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "gwmast/agreement.hpp"
#include "gwmast/core_trees.hpp"

namespace gwmast {

// Random streams are std::mt19937_64 seeded with splitmix64(seed ^ splitmix64(stream)).
// Trial i of any Monte Carlo routine uses stream i, so results do not depend on
// how trials are spread over threads.
std::uint64_t splitmix64(std::uint64_t x);
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);

// Uniform in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng);
// Uniform in [0, bound) by rejection, bound >= 1.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct SamplerConfig {
  OffspringDistribution dist = OffspringDistribution::binary();
  std::size_t size_cap = 1'000'000;  // vertices per attempt
  std::size_t max_attempts = 10'000'000;
  std::uint64_t seed = 0;
};

// Offspring draws by inversion against the cumulative law.
class OffspringSampler {
 public:
  explicit OffspringSampler(const OffspringDistribution& dist);
  Degree draw(std::mt19937_64& rng) const;

 private:
  std::vector<Degree> degrees_;
  std::vector<double> cumulative_;
};

// One run of the branching process, children ordered. nullopt when the
// vertex count exceeds the cap (the attempt is aborted).
std::optional<PlaneTree> sample_terminal(const OffspringSampler& offspring, std::size_t size_cap,
                                         std::mt19937_64& rng);

struct ConditionedSample {
  LabelledTree tree;
  std::size_t attempts = 0;
};

// Rejection-samples terminal trees until one has exactly n leaves, then labels
// the leaves by a uniform bijection onto [n]. Throws ImpossibleLeafCount when
// no tree has n leaves and AttemptsExhausted past the attempt budget.
ConditionedSample sample_conditioned(const SamplerConfig& cfg, unsigned n, std::mt19937_64& rng);

// Convenience: draw `count` conditioned trees from stream i = 0..count-1.
std::vector<LabelledTree> sample_conditioned_batch(const SamplerConfig& cfg, unsigned n, std::size_t count);

struct McReport {
  double estimate = 0;
  double std_error = 0;
  std::size_t trials = 0;
  double successes = 0;  // hit count, or sum of per-trial values
  std::uint64_t seed = 0;
};

// Number of worker threads: GWMAST_THREADS if set, else hardware concurrency.
unsigned default_thread_count();

// Fraction of conditioned draws in which `shape`'s label set induces `shape`
// with the out-degree condition met.
McReport mc_induced_probability(const SamplerConfig& cfg, const LabelledTree& shape, unsigned n,
                                std::size_t trials, unsigned threads = 0);

// Mean of common_count over independent pairs of conditioned trees.
McReport mc_expected_common(const SamplerConfig& cfg, unsigned n, unsigned a, std::size_t trials,
                            ComparisonMode mode = ComparisonMode::Ordered, unsigned threads = 0);

}  // namespace gwmast
