#include "urbanik/bessel.hpp"

#include <cmath>
#include <numbers>

#include "urbanik/errors.hpp"

namespace urbanik {
namespace {

constexpr double kEuler = 0.57721566490153286061;

// Power series, x <= 2:
//   K_0(x) = -(log(x/2) + gamma) I_0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 H_k.
double k0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double i0 = 1.0;
  double harmonic = 0.0;
  double tail = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    tail += term * harmonic;
    if (term * harmonic < 1e-18 * tail) break;
  }
  return -(std::log(0.5 * x) + kEuler) * i0 + tail;
}

// Steed's continued fraction (Temme's normalization) for x > 2, returning
// e^x K_0(x) = sqrt(pi / 2x) / s.
double k0_scaled_fraction(double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 10000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 1e-17) break;
  }
  return std::sqrt(std::numbers::pi / (2.0 * x)) / s;
}

void require_positive(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k0: requires finite x > 0");
}

}  // namespace

double bessel_k0(double x) {
  require_positive(x);
  if (x <= 2.0) return k0_series(x);
  return k0_scaled_fraction(x) * std::exp(-x);
}

double bessel_k0_scaled(double x) {
  require_positive(x);
  if (x <= 2.0) return k0_series(x) * std::exp(x);
  return k0_scaled_fraction(x);
}

}  // namespace urbanik
