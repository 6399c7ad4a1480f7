#include "gwmast/gw_sim.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

#include "gwmast/error.hpp"
#include "gwmast/power_series.hpp"

namespace gwmast {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

OffspringSampler::OffspringSampler(const OffspringDistribution& dist) {
  Rational acc = 0;
  for (const auto& [j, pj] : dist.probabilities()) {
    acc += pj;
    degrees_.push_back(j);
    cumulative_.push_back(acc.get_d());
  }
  cumulative_.back() = 1.0;
}

Degree OffspringSampler::draw(std::mt19937_64& rng) const {
  const double u = uniform01(rng);
  for (std::size_t i = 0; i + 1 < cumulative_.size(); ++i) {
    if (u < cumulative_[i]) return degrees_[i];
  }
  return degrees_.back();
}

std::optional<PlaneTree> sample_terminal(const OffspringSampler& offspring, std::size_t size_cap,
                                         std::mt19937_64& rng) {
  std::vector<Degree> word;
  std::size_t open = 1;
  while (open > 0) {
    if (word.size() >= size_cap) return std::nullopt;
    const Degree d = offspring.draw(rng);
    word.push_back(d);
    open = open - 1 + d;
  }
  return PlaneTree::from_preorder_degrees(std::move(word));
}

namespace {

// Draws until a tree with exactly n leaves appears. An attempt stops as soon
// as it must end with more than n leaves (every open slot holds a leaf), which
// leaves the conditional law unchanged.
ConditionedSample draw_conditioned(const OffspringSampler& offspring, const SamplerConfig& cfg, unsigned n,
                                   std::mt19937_64& rng) {
  std::vector<Degree> word;
  for (std::size_t attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    word.clear();
    std::size_t open = 1;
    std::size_t leaves = 0;
    bool rejected = false;
    while (open > 0) {
      if (word.size() >= cfg.size_cap || leaves + open > n) {
        rejected = true;
        break;
      }
      const Degree d = offspring.draw(rng);
      word.push_back(d);
      if (d == 0) ++leaves;
      open = open - 1 + d;
    }
    if (rejected || leaves != n) continue;

    std::vector<Label> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    for (std::size_t i = n; i > 1; --i) std::swap(labels[i - 1], labels[uniform_below(rng, i)]);
    return {LabelledTree(PlaneTree::from_preorder_degrees(std::move(word)), std::move(labels)), attempt};
  }
  throw Error(ErrorCode::AttemptsExhausted, std::to_string(cfg.max_attempts) + " attempts without " +
                                                std::to_string(n) + " leaves");
}

void require_possible(const OffspringDistribution& dist, unsigned n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be >= 1");
  if (sgn(solve_leaf_gf(dist, n)[n]) == 0) {
    throw Error(ErrorCode::ImpossibleLeafCount, "no terminal tree has " + std::to_string(n) + " leaves");
  }
}

// Runs trial(i) for i in [0, trials) over worker threads; values land in trial order.
template <class Trial>
std::vector<double> run_trials(std::size_t trials, unsigned threads, Trial trial) {
  std::vector<double> values(trials, 0.0);
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < trials; ++i) values[i] = trial(i);
    return values;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t end = std::min(trials, (w + 1) * chunk);
        for (std::size_t i = w * chunk; i < end; ++i) values[i] = trial(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return values;
}

}  // namespace

ConditionedSample sample_conditioned(const SamplerConfig& cfg, unsigned n, std::mt19937_64& rng) {
  require_possible(cfg.dist, n);
  return draw_conditioned(OffspringSampler(cfg.dist), cfg, n, rng);
}

std::vector<LabelledTree> sample_conditioned_batch(const SamplerConfig& cfg, unsigned n, std::size_t count) {
  require_possible(cfg.dist, n);
  const OffspringSampler offspring(cfg.dist);
  std::vector<LabelledTree> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = make_stream(cfg.seed, i);
    out.push_back(draw_conditioned(offspring, cfg, n, rng).tree);
  }
  return out;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("GWMAST_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

McReport mc_induced_probability(const SamplerConfig& cfg, const LabelledTree& shape, unsigned n,
                                std::size_t trials, unsigned threads) {
  if (trials == 0) throw Error(ErrorCode::DomainError, "need at least one trial");
  if (shape.leaf_count() >= n) throw Error(ErrorCode::DomainError, "need |S| < n");
  require_possible(cfg.dist, n);
  const OffspringSampler offspring(cfg.dist);
  const std::vector<Label> subset = shape.leaf_labels();
  for (Label x : subset) {
    if (x < 1 || x > static_cast<Label>(n)) throw Error(ErrorCode::UnknownLabel, "label " + std::to_string(x));
  }
  auto values = run_trials(trials, threads, [&](std::size_t i) {
    auto rng = make_stream(cfg.seed, i);
    const LabelledTree t = draw_conditioned(offspring, cfg, n, rng).tree;
    const InducedResult r = induce_rooted(t, subset);
    return r.degree_condition_met && r.shape == shape ? 1.0 : 0.0;
  });
  McReport rep;
  rep.trials = trials;
  rep.seed = cfg.seed;
  rep.successes = std::accumulate(values.begin(), values.end(), 0.0);
  rep.estimate = rep.successes / static_cast<double>(trials);
  rep.std_error = std::sqrt(rep.estimate * (1.0 - rep.estimate) / static_cast<double>(trials));
  return rep;
}

McReport mc_expected_common(const SamplerConfig& cfg, unsigned n, unsigned a, std::size_t trials,
                            ComparisonMode mode, unsigned threads) {
  if (trials == 0) throw Error(ErrorCode::DomainError, "need at least one trial");
  if (a < 1 || a > n) throw Error(ErrorCode::DomainError, "need 1 <= a <= n");
  require_possible(cfg.dist, n);
  const OffspringSampler offspring(cfg.dist);
  auto values = run_trials(trials, threads, [&](std::size_t i) {
    auto rng = make_stream(cfg.seed, i);
    const LabelledTree t1 = draw_conditioned(offspring, cfg, n, rng).tree;
    const LabelledTree t2 = draw_conditioned(offspring, cfg, n, rng).tree;
    return static_cast<double>(common_count(t1, t2, a, mode));
  });
  McReport rep;
  rep.trials = trials;
  rep.seed = cfg.seed;
  rep.successes = std::accumulate(values.begin(), values.end(), 0.0);
  rep.estimate = rep.successes / static_cast<double>(trials);
  double ss = 0;
  for (double v : values) ss += (v - rep.estimate) * (v - rep.estimate);
  const double var = trials > 1 ? ss / static_cast<double>(trials - 1) : 0.0;
  rep.std_error = std::sqrt(var / static_cast<double>(trials));
  return rep;
}

}  // namespace gwmast
