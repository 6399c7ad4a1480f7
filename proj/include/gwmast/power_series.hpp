#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gwmast/core_trees.hpp"
#include "gwmast/rational.hpp"

namespace gwmast {

// Truncated formal power series c_0 + c_1 y + ... + c_N y^N with exact
// rational coefficients. Binary operations truncate to the smaller order.
class PowerSeries {
 public:
  // Zero series of the given order.
  explicit PowerSeries(std::size_t order);
  // Order is coeffs.size() - 1; coeffs must not be empty.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& c, std::size_t order);
  // The series y.
  static PowerSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  // Zero beyond the truncation order.
  Rational operator[](std::size_t k) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& c, const PowerSeries& a);

  bool operator==(const PowerSeries& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries pow(const PowerSeries& s, unsigned e);

// Shifts and scales: the result has order N - 1 (order 0 for a constant series).
PowerSeries derivative(const PowerSeries& s);

// (1 - s)^(-e) = sum_k C(k+e-1, k) s^k. Throws ConstantTermNonzero unless s(0) = 0.
PowerSeries neg_pow(const PowerSeries& s, unsigned e);

// (1 + c y)^alpha for rational alpha.
PowerSeries binomial_series(const Rational& alpha, const Rational& c, std::size_t order);

// Leaf-count generating function Phi solving Phi = P(Phi) + p_0 (y - 1), i.e.
// [y^k] Phi is the probability that the terminal tree has k leaves.
PowerSeries solve_leaf_gf(const OffspringDistribution& dist, std::size_t order);

// Size-biased composition sum_{j>=1} (j+1) p_{j+1} Phi^j = P'(Phi).
PowerSeries phi1(const OffspringDistribution& dist, const PowerSeries& phi);

// B(x) = 1 - sqrt(1 - 2x); t! [x^t] B counts rooted binary trees on t labelled leaves.
PowerSeries binary_forest_gf(std::size_t order);

}  // namespace gwmast
