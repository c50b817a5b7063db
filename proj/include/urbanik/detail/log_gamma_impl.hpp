#pragma once

// Precision-generic log Gamma kernels.  Instantiated for std::complex<double>
// by complex_gamma.cpp and for boost's complex128 by the extended-precision
// direct inversion in density.cpp.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <vector>

namespace urbanik::detail {

/// Exact B_{2k} / (2k (2k - 1)), k = 1..n, via the Akiyama-Tanigawa algorithm.
inline std::vector<boost::multiprecision::cpp_rational> stirling_rationals(int n) {
  using boost::multiprecision::cpp_rational;
  const int top = 2 * n;
  std::vector<cpp_rational> a(top + 1);
  std::vector<cpp_rational> bernoulli(top + 1);
  for (int m = 0; m <= top; ++m) {
    a[m] = cpp_rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    bernoulli[m] = a[0];
  }
  std::vector<cpp_rational> out;
  out.reserve(n);
  for (int k = 1; k <= n; ++k) out.push_back(bernoulli[2 * k] / cpp_rational(2 * k * (2 * k - 1)));
  return out;
}

template <class Real>
std::vector<Real> stirling_table(int n) {
  std::vector<Real> out;
  for (const auto& r : stirling_rationals(n)) {
    out.push_back(static_cast<Real>(numerator(r)) / static_cast<Real>(denominator(r)));
  }
  return out;
}

/// Stirling tail sum_{k} coef[k] / z^(2k+1): the Binet remainder mu(z).
template <class Real, class Complex>
Complex stirling_tail(const Complex& z, const std::vector<Real>& coef) {
  const Complex inv = Complex(1) / z;
  const Complex inv2 = inv * inv;
  Complex sum(0);
  for (auto k = coef.size(); k-- > 0;) sum = sum * inv2 + Complex(coef[k]);
  return sum * inv;
}

/// log Gamma on the cut plane by upward recurrence to Re z >= threshold.
/// Each Log(z + j) is holomorphic off (-inf, -j], a subset of the cut, so the
/// sum is the holomorphic branch without any winding bookkeeping.
template <class Real, class Complex>
Complex log_gamma_kernel(Complex z, const std::vector<Real>& coef, Real threshold,
                         Real half_log_two_pi) {
  using std::log;
  Complex shift_sum(0);
  while (z.real() < threshold) {
    shift_sum += log(z);
    z += Real(1);
  }
  return (z - Real(0.5)) * log(z) - z + half_log_two_pi + stirling_tail(z, coef) - shift_sum;
}

template <class Real, class Complex>
Complex digamma_kernel(Complex z, const std::vector<Real>& coef, Real threshold) {
  using std::log;
  Complex shift_sum(0);
  while (z.real() < threshold) {
    shift_sum += Complex(1) / z;
    z += Real(1);
  }
  // d/dz of the Stirling tail: -sum (2k - 1) coef[k] / z^(2k).
  const Complex inv2 = Complex(1) / (z * z);
  Complex tail(0);
  for (auto k = coef.size(); k-- > 0;) {
    tail = tail * inv2 + Complex(Real(2 * static_cast<int>(k) + 1) * coef[k]);
  }
  return log(z) - Complex(Real(0.5)) / z - tail * inv2 - shift_sum;
}

template <class Real, class Complex>
Complex binet_mu_kernel(Complex z, const std::vector<Real>& coef, Real threshold) {
  using std::log;
  if (z.real() >= threshold) return stirling_tail(z, coef);
  const Complex z0 = z;
  Complex shift_sum(0);
  int k = 0;
  while (z.real() < threshold) {
    shift_sum += log(z);
    z += Real(1);
    ++k;
  }
  return stirling_tail(z, coef) + (z - Real(0.5)) * log(z) - (z0 - Real(0.5)) * log(z0) -
         Real(k) - shift_sum;
}

}  // namespace urbanik::detail
