#include "gwmast/exact_formulas.hpp"

#include <cmath>
#include <numbers>

#include "gwmast/agreement.hpp"
#include "gwmast/error.hpp"

namespace gwmast {

BigInt double_factorial(long m) {
  if (m < -1) throw Error(ErrorCode::DomainError, "double factorial needs m >= -1");
  if (m % 2 == 0) throw Error(ErrorCode::EvenArgument, "double factorial defined here for odd m only");
  BigInt r;
  if (m == -1) return 1;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

BigInt forest_count(unsigned b, unsigned k) {
  if (k < 1 || k > b) throw Error(ErrorCode::DomainError, "forest count needs 1 <= k <= b");
  BigInt num = factorial(2ul * b - k - 1) * k;
  BigInt den = factorial(b - k);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), b - k);
  return num / den;
}

BigInt attached_forest_count(unsigned b, unsigned k, unsigned a) {
  if (a < 2) throw Error(ErrorCode::DomainError, "attached forests need a host with a >= 2 leaves");
  return forest_count(b, k) * binomial(k + 2ul * a - 3, 2ul * a - 3);
}

BigInt unrooted_host_count(unsigned n, unsigned a) {
  if (n < 3 || a < 2 || a >= n) throw Error(ErrorCode::DomainError, "host count needs n >= 3 and 2 <= a < n");
  return double_factorial(2l * n - 5) / double_factorial(2l * a - 3);
}

Rational expected_common_unrooted(unsigned n, unsigned a) {
  if (n < 3 || a < 2 || a >= n) throw Error(ErrorCode::DomainError, "expectation needs n >= 3 and 2 <= a < n");
  Rational r(binomial(n, a), double_factorial(2l * a - 3));
  r.canonicalize();
  return r;
}

Rational expected_common_binary_closed_form(unsigned n, unsigned a) {
  if (a < 1 || a > n) throw Error(ErrorCode::DomainError, "closed form needs 1 <= a <= n");
  BigInt den = double_factorial(2l * a - 3);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), a - 1);
  Rational r(binomial(n, a), den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------

InducedProbabilityModel::InducedProbabilityModel(const OffspringDistribution& dist, unsigned n)
    : dist_(dist),
      n_(n),
      phi_(solve_leaf_gf(dist, n < 1 ? 1 : n)),
      phi1_(phi1(dist, phi_)),
      phi_prime_(derivative(phi_)),
      leaf_prob_(phi_[n]) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be >= 1");
}

Rational InducedProbabilityModel::kernel_coefficient(unsigned a, unsigned edges) {
  auto it = kernels_.find(edges);
  if (it == kernels_.end()) {
    // Phi' has order n-1, enough for every a >= 1.
    PowerSeries s = neg_pow(phi1_.truncated(phi_prime_.order()), edges) * phi_prime_;
    it = kernels_.emplace(edges, std::move(s)).first;
  }
  return it->second[n_ - a];
}

InducedProbability InducedProbabilityModel::evaluate(const PlaneTree& shape) {
  if (!shape.is_induced_shape()) throw Error(ErrorCode::DomainError, "shape has an out-degree-1 vertex");
  const auto a = static_cast<unsigned>(shape.leaf_count());
  if (a > n_) throw Error(ErrorCode::DomainError, "shape has more leaves than the host");
  if (sgn(leaf_prob_) == 0) {
    throw Error(ErrorCode::ZeroDenominator, "P(A_n) = 0 for n = " + std::to_string(n_));
  }
  InducedProbability out;
  out.leaf_prob = leaf_prob_;
  const Rational weight = tree_weight(shape, dist_);
  if (sgn(weight) == 0) {
    out.joint = 0;
    out.conditional = 0;
    return out;
  }
  Rational scale(factorial(n_ - a), factorial(n_));
  scale.canonicalize();
  out.joint = weight * scale / dist_.p0() *
              kernel_coefficient(a, static_cast<unsigned>(shape.edge_count()));
  out.conditional = out.joint / leaf_prob_;
  return out;
}

InducedProbability induced_probability(const OffspringDistribution& dist, const PlaneTree& shape, unsigned n) {
  InducedProbabilityModel model(dist, n);
  return model.evaluate(shape);
}

Rational unordered_induced_probability(const OffspringDistribution& dist, const LabelledTree& shape, unsigned n) {
  InducedProbabilityModel model(dist, n);
  Rational total = 0;
  for (const auto& ordered : shape.all_orderings()) total += model.evaluate(ordered.shape()).conditional;
  return total;
}

Rational expected_common_gw(const OffspringDistribution& dist, unsigned n, unsigned a, unsigned max_leaves) {
  if (a < 1 || a > n) throw Error(ErrorCode::DomainError, "expectation needs 1 <= a <= n");
  if (a > max_leaves) {
    throw Error(ErrorCode::ShapeEnumerationTooLarge,
                "a = " + std::to_string(a) + " exceeds the shape enumeration limit " + std::to_string(max_leaves));
  }
  InducedProbabilityModel model(dist, n);
  Rational sum = 0;
  for (const auto& shape : enumerate_shapes(a, dist.max_degree())) {
    const Rational c = model.evaluate(shape).conditional;
    sum += c * c;
  }
  return Rational(binomial(n, a) * factorial(a)) * sum;
}

double asymptotic_leaf_prob(const OffspringDistribution& dist, unsigned n) {
  if (!dist.aperiodic()) {
    throw Error(ErrorCode::PeriodicSupport, "period is " + std::to_string(dist.period()));
  }
  const double p0 = dist.p0().get_d();
  const double s2 = dist.sigma2().get_d();
  return std::sqrt(p0 / (2.0 * std::numbers::pi * s2)) * std::pow(static_cast<double>(n), -1.5);
}

double asymptotic_ratio(const OffspringDistribution& dist, unsigned n, const Rational& exact) {
  return exact.get_d() / asymptotic_leaf_prob(dist, n);
}

// ---------------------------------------------------------------------------

namespace {

double q_objective(const std::map<Degree, Rational>& q, double r) {
  double f = r;
  for (const auto& [j, qj] : q) {
    if (j >= 2) f -= qj.get_d() * std::pow(r, j);
  }
  return f;
}

double q_slope(const std::map<Degree, Rational>& q, double r) {
  double f = 1.0;
  for (const auto& [j, qj] : q) {
    if (j >= 2) f -= qj.get_d() * j * std::pow(r, j - 1);
  }
  return f;
}

}  // namespace

BoundConstants bound_constants(const OffspringDistribution& dist) {
  BoundConstants b;
  b.sigma2 = dist.sigma2();
  const double p0 = dist.p0().get_d();
  const double s2 = b.sigma2.get_d();
  b.gamma = std::sqrt(2.0 * p0) / std::sqrt(s2);
  b.chi = std::sqrt(2.0 * p0 * s2);
  b.lambda = std::max(1.0 / (b.chi * b.chi), 1.0 / b.chi);

  Rational squares = 0;
  for (const auto& [j, pj] : dist.probabilities()) {
    if (j >= 2) {
      b.q[j] = pj * pj;
      squares += pj * pj;
    }
  }
  b.q[0] = 1 - squares;

  // The slope 1 - sum j q_j r^(j-1) is strictly decreasing and positive at r = 1.
  double lo = 1.0;
  double hi = 2.0;
  while (q_slope(b.q, hi) >= 0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (q_slope(b.q, mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  b.rho = 0.5 * (lo + hi);
  b.m = q_objective(b.q, b.rho);
  b.stationarity_residual = q_slope(b.q, b.rho);
  b.c = std::numbers::e * p0 * b.lambda / std::sqrt(b.m);
  return b;
}

TailThreshold tail_threshold(const BoundConstants& constants, unsigned n, double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) throw Error(ErrorCode::DomainError, "eps must lie in (0, 1/2]");
  const double x = (1.0 + eps) * constants.c * std::sqrt(static_cast<double>(n));
  TailThreshold t;
  t.a_star = static_cast<unsigned long>(std::ceil(x));
  t.probability_bound = std::pow(1.0 - eps, x);
  return t;
}

}  // namespace gwmast
