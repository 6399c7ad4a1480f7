#include "gwmast/power_series.hpp"

#include <algorithm>
#include <utility>

#include "gwmast/error.hpp"

namespace gwmast {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::DomainError, "power series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::variable(std::size_t order) {
  PowerSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

Rational PowerSeries::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
  PowerSeries r(a.order());
  for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = c * a.coeffs_[k];
  return r;
}

PowerSeries pow(const PowerSeries& s, unsigned e) {
  PowerSeries result = PowerSeries::constant(1, s.order());
  PowerSeries base = s;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

PowerSeries derivative(const PowerSeries& s) {
  if (s.order() == 0) return PowerSeries(0);
  std::vector<Rational> c(s.order());
  for (std::size_t k = 1; k <= s.order(); ++k) c[k - 1] = s[k] * static_cast<unsigned long>(k);
  return PowerSeries(std::move(c));
}

PowerSeries neg_pow(const PowerSeries& s, unsigned e) {
  if (sgn(s[0]) != 0) throw Error(ErrorCode::ConstantTermNonzero, "(1 - s)^(-e) needs s(0) = 0");
  // g = 1/(1 - s) from g = 1 + s g; valuation of s is >= 1 so each g_k uses earlier terms only.
  const std::size_t n = s.order();
  std::vector<Rational> g(n + 1, Rational(0));
  g[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (sgn(s.coeffs()[i]) != 0) acc += s.coeffs()[i] * g[k - i];
    }
    g[k] = acc;
  }
  return pow(PowerSeries(std::move(g)), e);
}

PowerSeries binomial_series(const Rational& alpha, const Rational& c, std::size_t order) {
  std::vector<Rational> coeffs(order + 1);
  coeffs[0] = 1;
  for (std::size_t t = 1; t <= order; ++t) {
    coeffs[t] = coeffs[t - 1] * (alpha - static_cast<unsigned long>(t - 1)) * c / static_cast<unsigned long>(t);
  }
  return PowerSeries(std::move(coeffs));
}

PowerSeries solve_leaf_gf(const OffspringDistribution& dist, std::size_t order) {
  if (order < 1) throw Error(ErrorCode::DomainError, "leaf generating function needs order >= 1");
  const Degree max_deg = dist.max_degree();
  // powers[j][k] = [y^k] Phi^j for j = 1..max_deg. Since Phi has valuation 1,
  // [y^k] Phi^j for j >= 2 only involves coefficients of Phi below k.
  std::vector<std::vector<Rational>> powers(max_deg + 1, std::vector<Rational>(order + 1, Rational(0)));
  std::vector<Rational>& phi = powers[1];
  phi[1] = dist.p0();
  for (Degree j = 2; j <= max_deg; ++j) {
    // [y^j] Phi^j = p_0^j is the first nonzero term.
    if (j <= order) powers[j][j] = powers[j - 1][j - 1] * phi[1];
  }
  for (std::size_t k = 2; k <= order; ++k) {
    for (Degree j = 2; j <= max_deg; ++j) {
      if (k <= j) continue;
      Rational acc = 0;
      for (std::size_t i = 1; i + (j - 1) <= k; ++i) {
        const Rational& lower = powers[j - 1][k - i];
        if (sgn(phi[i]) != 0 && sgn(lower) != 0) acc += phi[i] * lower;
      }
      powers[j][k] = acc;
    }
    Rational pk = 0;
    for (Degree j : dist.support()) {
      if (j >= 2) pk += dist.p(j) * powers[j][k];
    }
    phi[k] = pk;
  }
  return PowerSeries(std::move(phi));
}

PowerSeries phi1(const OffspringDistribution& dist, const PowerSeries& phi) {
  PowerSeries result(phi.order());
  PowerSeries power = phi;  // Phi^j, starting at j = 1
  for (Degree j = 1; j + 1 <= dist.max_degree(); ++j) {
    const Rational& next = dist.p(j + 1);
    if (sgn(next) != 0) result = result + Rational(next * (j + 1)) * power;
    if (j + 2 <= dist.max_degree()) power = power * phi;
  }
  return result;
}

PowerSeries binary_forest_gf(std::size_t order) {
  if (order < 1) throw Error(ErrorCode::DomainError, "order must be >= 1");
  PowerSeries root = binomial_series(Rational(1, 2), Rational(-2), order);
  return PowerSeries::constant(1, order) - root;
}

}  // namespace gwmast
