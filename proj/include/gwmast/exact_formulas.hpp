#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gwmast/core_trees.hpp"
#include "gwmast/power_series.hpp"
#include "gwmast/rational.hpp"

namespace gwmast {

// m!! for odd m >= -1, with (-1)!! = 1. Throws EvenArgument or DomainError.
BigInt double_factorial(long m);

// Ordered forests of k rooted binary trees on b labelled leaves in total:
// k (2b-k-1)! / ((b-k)! 2^(b-k)).
BigInt forest_count(unsigned b, unsigned k);

// Forests attached to ordered internal points of the 2(a-1) edges of a host
// with a leaves: F(b,k) C(k+2a-3, 2a-3).
BigInt attached_forest_count(unsigned b, unsigned k, unsigned a);

// Unrooted binary trees on [n] in which a fixed a-set induces a given rooted
// shape: (2n-5)!!/(2a-3)!!, for 2 <= a < n.
BigInt unrooted_host_count(unsigned n, unsigned a);

// C(n,a)/(2a-3)!! for two independent uniform unrooted binary trees.
Rational expected_common_unrooted(unsigned n, unsigned a);

// Closed form C(n,a)/[2^(a-1)(2a-3)!!] for the binary branching model.
Rational expected_common_binary_closed_form(unsigned n, unsigned a);

struct InducedProbability {
  Rational joint;        // P(A_n(T)): n leaves and S induces T
  Rational leaf_prob;    // P(A_n)
  Rational conditional;  // P(A_n(T) | A_n)
};

// Caches Phi, Phi' and the per-edge-count coefficients for one (dist, n).
//
// Computes the probability that a fixed leaf set S of size a induces a given
// ordered shape in the conditioned terminal tree T_n:
//   P(A_n(T)) = P(T) (n-a)! / (p_0 n!) [y^(n-a)] (1 - Phi_1)^(-e(T)) Phi'
// where P(T) is the product of p_{d(v)} over every vertex of T.
class InducedProbabilityModel {
 public:
  InducedProbabilityModel(const OffspringDistribution& dist, unsigned n);

  const OffspringDistribution& distribution() const { return dist_; }
  unsigned n() const { return n_; }
  const PowerSeries& phi() const { return phi_; }
  const Rational& leaf_prob() const { return leaf_prob_; }

  // Throws DomainError unless the shape is an induced shape with 1 <= a <= n
  // leaves; ZeroDenominator when P(A_n) = 0.
  InducedProbability evaluate(const PlaneTree& shape);

  // [y^(n-a)] (1 - Phi_1)^(-e) Phi'.
  Rational kernel_coefficient(unsigned a, unsigned edges);

 private:
  OffspringDistribution dist_;
  unsigned n_;
  PowerSeries phi_;
  PowerSeries phi1_;
  PowerSeries phi_prime_;
  Rational leaf_prob_;
  std::map<unsigned, PowerSeries> kernels_;
};

InducedProbability induced_probability(const OffspringDistribution& dist, const PlaneTree& shape, unsigned n);

// Sum of the conditional probability over every ordering of the children of a
// labelled shape: the probability that S induces the shape as an unordered tree.
Rational unordered_induced_probability(const OffspringDistribution& dist, const LabelledTree& shape, unsigned n);

// C(n,a) a! sum over ordered shapes tau with a leaves of P(A_n(tau) | A_n)^2.
// Refuses (ShapeEnumerationTooLarge) for a > max_leaves.
Rational expected_common_gw(const OffspringDistribution& dist, unsigned n, unsigned a, unsigned max_leaves = 8);

// Leading-order estimate (p_0 / (2 pi sigma^2))^(1/2) n^(-3/2) of P(A_n).
// Throws PeriodicSupport unless the distribution is aperiodic.
double asymptotic_leaf_prob(const OffspringDistribution& dist, unsigned n);

// exact / asymptotic, given the exact P(A_n).
double asymptotic_ratio(const OffspringDistribution& dist, unsigned n, const Rational& exact);

struct BoundConstants {
  Rational sigma2;
  double gamma = 0;   // (2 p_0)^(1/2) / sigma
  double chi = 0;     // (2 p_0 sigma^2)^(1/2)
  double lambda = 0;  // max(chi^-2, chi^-1)
  std::map<Degree, Rational> q;  // q_0 = 1 - sum p_j^2, q_j = p_j^2
  double rho = 0;     // argmax of r - sum_{j>=2} q_j r^j
  double m = 0;       // the maximum value
  double c = 0;       // e p_0 lambda m^(-1/2)
  double stationarity_residual = 0;  // 1 - sum j q_j rho^(j-1)
};

BoundConstants bound_constants(const OffspringDistribution& dist);

struct TailThreshold {
  unsigned long a_star = 0;  // ceil((1+eps) c n^(1/2))
  double probability_bound = 0;  // (1-eps)^((1+eps) c n^(1/2))
};

// Throws DomainError unless eps is in (0, 1/2].
TailThreshold tail_threshold(const BoundConstants& constants, unsigned n, double eps);

}  // namespace gwmast
