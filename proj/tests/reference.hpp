#pragma once

// Hand-rolled reference arithmetic for tests: loops over integers only, no
// calls into the library's combinatorial helpers.

#include <gmpxx.h>

#include <vector>

namespace ref {

inline mpz_class odd_double_factorial(long m) {
  mpz_class r = 1;
  for (long k = m; k > 1; k -= 2) r *= k;
  return r;
}

inline mpz_class fact(long n) {
  mpz_class r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

inline mpz_class choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline mpz_class pow2(long e) {
  mpz_class r = 1;
  for (long i = 0; i < e; ++i) r *= 2;
  return r;
}

inline mpq_class q(const mpz_class& num, const mpz_class& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

// Coefficients 0..order of B(x) = 1 - sqrt(1 - 2x): [x^t] = (2t-3)!!/t!.
inline std::vector<mpq_class> binary_forest_coeffs(long order) {
  std::vector<mpq_class> c(order + 1, 0);
  for (long t = 1; t <= order; ++t) c[t] = q(odd_double_factorial(2 * t - 3), fact(t));
  return c;
}

inline std::vector<mpq_class> convolve(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  std::vector<mpq_class> c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// C(n,a) / [2^(a-1) (2a-3)!!]
inline mpq_class binary_expectation(long n, long a) {
  return q(choose(n, a), pow2(a - 1) * odd_double_factorial(2 * a - 3));
}

}  // namespace ref
