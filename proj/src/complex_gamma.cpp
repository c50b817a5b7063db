#include "urbanik/complex_gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "urbanik/detail/log_gamma_impl.hpp"
#include "urbanik/errors.hpp"

namespace urbanik {
namespace {

// Ten Stirling terms at Re z >= 10 leave a remainder below 2e-19.
constexpr int kStirlingTerms = 10;
constexpr double kRecurrenceThreshold = 10.0;
constexpr double kPoleRadius = 1e-12;

const std::vector<double>& coefficients() {
  static const std::vector<double> table = detail::stirling_table<double>(kStirlingTerms);
  return table;
}

std::string show(Cx z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

void require_cut_plane(Cx z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(who) + ": non-finite argument");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    throw DomainError(std::string(who) + ": argument on the cut (-inf, 0]: " + show(z));
  }
  if (z.real() < 0.5) {
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - Cx(nearest, 0.0)) < kPoleRadius) {
      throw DomainError(std::string(who) + ": argument within 1e-12 of a pole: " + show(z));
    }
  }
}

Cx finite_or_throw(Cx v, const char* who, Cx z) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError(std::string(who) + ": result not representable at " + show(z));
  }
  return v;
}

}  // namespace

namespace detail {
const double* stirling_coefficients(int n) {
  if (n > kStirlingTerms) throw DomainError("stirling_coefficients: table holds 10 terms");
  return coefficients().data();
}
}  // namespace detail

Cx log_gamma(Cx z) {
  require_cut_plane(z, "log_gamma");
  if (z == Cx(1.0) || z == Cx(2.0)) return Cx(0.0);
  const Cx v = detail::log_gamma_kernel<double, Cx>(z, coefficients(), kRecurrenceThreshold,
                                                   0.5 * std::log(2.0 * std::numbers::pi));
  return finite_or_throw(v, "log_gamma", z);
}

Cx gamma_pow(Cx z, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("gamma_pow: exponent must be > 0");
  return std::exp(c * log_gamma(z));
}

Cx digamma(Cx z) {
  require_cut_plane(z, "digamma");
  const Cx v = detail::digamma_kernel<double, Cx>(z, coefficients(), kRecurrenceThreshold);
  return finite_or_throw(v, "digamma", z);
}

Cx binet_mu(Cx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(z.real() > 0.0)) {
    throw DomainError("binet_mu: requires Re z > 0, got " + show(z));
  }
  const Cx v = detail::binet_mu_kernel<double, Cx>(z, coefficients(), kRecurrenceThreshold);
  return finite_or_throw(v, "binet_mu", z);
}

double GammaEnvelope::log_bound(double u, double v) const {
  const double av = std::abs(v);
  return std::log(prefactor) - c * std::numbers::pi * av / 2.0 + c * (u - 0.5) * std::log(av);
}

namespace {

// Largest log of |Gamma(u+iv)| / (exp(-pi |v| / 2) |v|^(u - 1/2)) over the
// sample grid.  The c-th power of the ratio is c times this, so one sweep
// serves every c.
double worst_log_ratio() {
  static const double worst = [] {
    double w = -INFINITY;
    constexpr int kSamples = 400;
    for (const double u : {0.5, 1.0, 1.5, 2.0}) {
      for (int k = 0; k <= kSamples; ++k) {
        // Conjugate symmetry makes negative v redundant.
        const double v = 2.0 * std::pow(100.0, static_cast<double>(k) / kSamples);
        w = std::max(w, log_gamma(Cx(u, v)).real() + std::numbers::pi * v / 2.0 -
                            (u - 0.5) * std::log(v));
      }
    }
    return w;
  }();
  return worst;
}

}  // namespace

GammaEnvelope gamma_abs_envelope(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("gamma_abs_envelope: c must be > 0");
  return GammaEnvelope{c, 1.1 * std::exp(c * worst_log_ratio())};
}

}  // namespace urbanik
