#include "urbanik/density.hpp"

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>
#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "urbanik/bessel.hpp"
#include "urbanik/detail/log_gamma_impl.hpp"
#include "urbanik/detail/trapezoid_impl.hpp"
#include "urbanik/errors.hpp"

namespace urbanik {
namespace {

using boost::multiprecision::complex128;
using boost::multiprecision::float128;

constexpr double kPi = std::numbers::pi;
constexpr double kLogTwoPi = 1.8378770664093454836;
constexpr double kInitialStep = 0.5;

void require_ct(double c, double t, const char* who) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError(std::string(who) + ": c must be > 0");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError(std::string(who) + ": t must be > 0");
}

double log_gamma_real(double x) { return log_gamma(Cx(x, 0.0)).real(); }

double asympt_large_log(double c, double t) {
  return 0.5 * (c - 1.0) * kLogTwoPi - 0.5 * std::log(c) - c * std::pow(t, 1.0 / c) -
         (c - 1.0) / (2.0 * c) * std::log(t);
}

DensityEval make_eval(double c, double t, double log_value, double rel_err, Method m) {
  const double value = std::exp(log_value);
  return DensityEval{c, t, value, log_value, value * rel_err, m, rel_err};
}

// Final step of the direct route: real part, imaginary residual folded into
// the error, negative values clamped only within the error estimate.
DensityEval finish_direct(double c, double t, Cx integral, double err,
                          Method method = Method::Direct) {
  double value = integral.real();
  const double abs_err = err + std::abs(integral.imag());
  if (value < 0.0) {
    if (-value > abs_err) {
      throw ConsistencyError(std::string(method_name(method)) + ": negative density " + std::to_string(value) +
                             " beyond error estimate " + std::to_string(abs_err));
    }
    value = 0.0;
  }
  const double log_value = value > 0.0 ? std::log(value) : -INFINITY;
  const double rel_err = value > 0.0 ? abs_err / value : INFINITY;
  return DensityEval{c, t, value, log_value, abs_err, method, rel_err};
}

// binary128 variant of the direct quadrature for cancellation exponents
// between kCancellationCap and kExtendedCancellationCap.
struct QuadPrecision {
  static constexpr int kStirlingTerms = 20;
  static const std::vector<float128>& coefficients() {
    static const std::vector<float128> table =
        detail::stirling_table<float128>(kStirlingTerms);
    return table;
  }
  static float128 half_log_two_pi() {
    static const float128 v = log(2 * boost::math::constants::pi<float128>()) / 2;
    return v;
  }
};

DensityEval direct_extended(double c, double t, double half_width, double step,
                            const QuadSpec& spec) {
  const float128 cq = c;
  const float128 log_t = log(float128(t));
  const float128 two_pi = 2 * boost::math::constants::pi<float128>();
  const auto& coef = QuadPrecision::coefficients();
  const float128 half_log = QuadPrecision::half_log_two_pi();
  auto g = [&](const float128& x) {
    const complex128 lg = detail::log_gamma_kernel<float128, complex128>(
        complex128(float128(1), -x), coef, float128(20), half_log);
    return exp(complex128(-log_t, x * log_t) + cq * lg) / two_pi;
  };
  const auto r = detail::refine_trapezoid<float128, complex128>(
      g, float128(half_width), float128(step), float128(spec.target_abs_tol),
      float128(spec.target_rel_tol), spec.max_nodes);
  if (!r.converged) {
    throw NoConvergence("density_direct: extended-precision quadrature did not converge");
  }
  const float128 floor =
      float128(detail::kRoundoffFactor) * std::numeric_limits<float128>::epsilon() * r.l1_norm;
  const double err = static_cast<double>(r.last_difference > floor ? r.last_difference : floor);
  return finish_direct(
      c, t, Cx(static_cast<double>(r.value.real()), static_cast<double>(r.value.imag())), err);
}

// Tail bound of the saddle-point integral beyond |u| > U.  Re f is concave
// with slope -atan(u), and |M| <= exp(c / (12 tau)).
double shifted_log_tail(double c, double tau, double u) {
  const double kappa = c * tau;
  const double re_f = 0.5 * std::log1p(u * u) - u * std::atan(u);
  return std::log(2.0) + kappa * re_f - 0.25 * c * std::log1p(u * u) + c / (12.0 * tau) -
         std::log(kappa * std::atan(u));
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Direct: return "Direct";
    case Method::Shifted: return "Shifted";
    case Method::AsymptLarge: return "AsymptLarge";
    case Method::AsymptSmall: return "AsymptSmall";
    case Method::ClosedForm: return "ClosedForm";
  }
  return "?";
}

Lambda Lambda::from_t(double t) {
  if (!(t > 0.0) || !(t < 1.0)) throw DomainError("Lambda: requires 0 < t < 1");
  return Lambda{-std::log(t)};
}

double direct_cancellation_exponent(double c, double t) {
  return std::max(c * std::pow(t, 1.0 / c), -std::log(t));
}

double direct_step_limit(double t) { return 2.0 * kPi / (std::abs(std::log(t)) + kPi); }

namespace {

struct DirectGrid {
  double half_width;
  double step;
};

DirectGrid direct_grid(double c, double t, const QuadSpec& spec) {
  // The truncated tail must be small against the density itself; the
  // large-t leading term at max(t, 1) is a safe under-estimate of its size.
  const double scale = 0.1 * std::exp(asympt_large_log(c, std::max(t, 1.0)));
  const double tail_tol = std::max(std::max(spec.target_abs_tol, spec.target_rel_tol * scale),
                                   std::numeric_limits<double>::min());
  double step = kInitialStep;
  const double limit = direct_step_limit(t);
  while (step > limit) step /= 2.0;
  const double half_width = round_half_width(truncation_for_density(c, t, tail_tol), step);
  return {half_width, step};
}

}  // namespace

DensityEval density_direct(double c, double t, const QuadSpec& spec) {
  require_ct(c, t, "density_direct");
  spec.validate();
  const double k = direct_cancellation_exponent(c, t);
  if (k > kExtendedCancellationCap) {
    throw CancellationError("density_direct: cancellation exponent " + std::to_string(k) +
                            " exceeds " + std::to_string(kExtendedCancellationCap));
  }
  const DirectGrid grid = direct_grid(c, t, spec);
  if (k > kCancellationCap) return direct_extended(c, t, grid.half_width, grid.step, spec);

  const double log_t = std::log(t);
  auto f = [&](Cx z) {
    return std::exp((Cx(0.0, 1.0) * z - 1.0) * log_t + c * log_gamma(1.0 - Cx(0.0, 1.0) * z)) /
           (2.0 * kPi);
  };
  const QuadResult q =
      trapezoid_line(f, LineContour::horizontal(0.0, grid.half_width, grid.step), spec);
  q.require_converged("density_direct");
  return finish_direct(c, t, q.value, q.abs_err_estimate);
}

namespace {

// Inversion along L_a with a = eps - 1, eps = min(1, c / Lambda): the line
// Re(1 - ix) = eps passes at distance eps from the pole of Gamma at 0.
struct LoweredGrid {
  double eps;
  double half_width;
  double step;
};

LoweredGrid lowered_grid(double c, double t, const QuadSpec& spec) {
  const double lambda = -std::log(t);
  const double eps = std::min(1.0, c / lambda);
  // |Gamma(eps + iy)| <= |Gamma(1 + eps + iy)| / |y| and the envelope at
  // u = 1 + eps bound the tail; the density is about Lambda^{c-1} / Gamma(c).
  const GammaEnvelope env = gamma_abs_envelope(c);
  const double rate = c * kPi / 2.0;
  const double power = c * (eps - 0.5);
  auto log_tail = [&](double x) {
    return std::log(env.prefactor / kPi) + eps * lambda - rate * x + power * std::log(x) -
           std::log(rate - std::max(power, 0.0) / x);
  };
  const double log_scale = (c - 1.0) * std::log(lambda) - log_gamma_real(c);
  const double target =
      std::max(std::log(spec.target_abs_tol), std::log(0.1 * spec.target_rel_tol) + log_scale);
  double lo = 4.0;
  double hi = lo;
  if (log_tail(lo) > target) {
    hi = 8.0;
    while (log_tail(hi) > target) hi *= 2.0;
    for (int it = 0; it < 100 && hi - lo > 1e-9 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (log_tail(mid) > target ? lo : hi) = mid;
    }
  }
  double step = kInitialStep;
  while (step > eps / 2.0 || step > direct_step_limit(t)) step /= 2.0;
  return {eps, round_half_width(hi, step), step};
}

}  // namespace

DensityEval density_lowered(double c, double t, const QuadSpec& spec) {
  require_ct(c, t, "density_lowered");
  if (!(t < 1.0)) throw DomainError("density_lowered: requires t < 1");
  spec.validate();
  const LoweredGrid grid = lowered_grid(c, t, spec);
  const double log_t = std::log(t);
  auto f = [&](Cx z) {
    return std::exp((Cx(0.0, 1.0) * z - 1.0) * log_t + c * log_gamma(1.0 - Cx(0.0, 1.0) * z)) /
           (2.0 * kPi);
  };
  const QuadResult q = trapezoid_line(
      f, LineContour::horizontal(grid.eps - 1.0, grid.half_width, grid.step), spec);
  q.require_converged("density_lowered");
  return finish_direct(c, t, q.value, q.abs_err_estimate, Method::Shifted);
}

Cx saddle_phase(double u) {
  if (std::abs(u) < 0.25) {
    // f(u) = sum_{m>=2} (iu)^m / (m (m-1))
    const Cx iu(0.0, u);
    Cx power = iu * iu;
    Cx sum(0.0);
    for (int m = 2; m <= 30; ++m) {
      sum += power / static_cast<double>(m * (m - 1));
      power *= iu;
    }
    return sum;
  }
  const Cx log_w(0.5 * std::log1p(u * u), -std::atan(u));
  return Cx(0.0, u) + Cx(1.0, -u) * log_w;
}

namespace {

// J = int e^{kappa f(u)} g_c(u) M(u,t) dv with u = v / sqrt(kappa); the
// density is (2pi)^{c/2-1} t^{1/c-1/2} e^{-kappa} J / sqrt(kappa) and its
// ratio to the large-t leading term is J / sqrt(2pi).
struct SaddleIntegral {
  double value;
  double rel_err;
};

SaddleIntegral saddle_integral(double c, double t, const QuadSpec& spec) {
  spec.validate();
  const double log_t = std::log(t);
  const double tau = std::exp(log_t / c);
  const double kappa = c * tau;
  const double scale = 1.0 / std::sqrt(kappa);

  const double target = std::log(0.1 * spec.target_rel_tol * std::sqrt(2.0 * kPi / kappa));
  double u_hi = 4.0 * kInitialStep * scale;
  while (shifted_log_tail(c, tau, u_hi) > target) u_hi *= 2.0;
  double u_lo = u_hi / 2.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (u_lo + u_hi);
    (shifted_log_tail(c, tau, mid) > target ? u_lo : u_hi) = mid;
  }
  const double half_width = round_half_width(u_hi / scale, kInitialStep);

  auto f = [&](Cx z) {
    const double u = scale * z.real();
    const Cx log_w(0.5 * std::log1p(u * u), -std::atan(u));
    return std::exp(kappa * saddle_phase(u) - 0.5 * c * log_w + c * binet_mu(Cx(tau, -tau * u)));
  };
  QuadSpec inner = spec;
  inner.target_abs_tol = std::numeric_limits<double>::min();
  const QuadResult q =
      trapezoid_line(f, LineContour::horizontal(0.0, half_width, kInitialStep), inner);
  q.require_converged("density_shifted");
  if (!(q.value.real() > 0.0)) {
    throw ConsistencyError("density_shifted: non-positive saddle integral");
  }
  return {q.value.real(), (q.abs_err_estimate + std::abs(q.value.imag())) / q.value.real()};
}

}  // namespace

DensityEval density_shifted(double c, double t, const QuadSpec& spec) {
  require_ct(c, t, "density_shifted");
  if (!(t > 1.0)) throw DomainError("density_shifted: requires t > 1");
  const SaddleIntegral j = saddle_integral(c, t, spec);
  const double log_t = std::log(t);
  const double kappa = c * std::exp(log_t / c);
  const double log_prefactor =
      (0.5 * c - 1.0) * kLogTwoPi + (1.0 / c - 0.5) * log_t - kappa - 0.5 * std::log(kappa);
  return make_eval(c, t, log_prefactor + std::log(j.value), j.rel_err, Method::Shifted);
}

LargeTRatio large_t_ratio(double c, double t, const QuadSpec& spec) {
  require_ct(c, t, "large_t_ratio");
  if (t > 1.0 && c * std::pow(t, 1.0 / c) > kCancellationCap) {
    const SaddleIntegral j = saddle_integral(c, t, spec);
    return {j.value / std::sqrt(2.0 * kPi), j.rel_err, Method::Shifted};
  }
  const DensityEval d = c == 1.0 || c == 2.0 ? density_closed(c, t) : density(c, t, spec);
  return {std::exp(d.log_value - asympt_large(c, t).log_value), d.rel_err, d.method};
}

DensityEval asympt_large(double c, double t) {
  require_ct(c, t, "asympt_large");
  return make_eval(c, t, asympt_large_log(c, t), std::pow(t, -1.0 / c), Method::AsymptLarge);
}

DensityEval asympt_small(double c, Lambda lambda) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("asympt_small: c must be > 0");
  if (!(lambda.value > 0.0)) throw DomainError("asympt_small: requires Lambda > 0");
  const double log_lambda = std::log(lambda.value);
  const double log_value = (c - 1.0) * log_lambda - log_gamma_real(c);
  const double value = std::exp(log_value);
  // O(Lambda^{c-2}) error term
  const double abs_err = std::exp((c - 2.0) * log_lambda);
  const double t = std::exp(-lambda.value);
  return DensityEval{c, t, value, log_value, abs_err, Method::AsymptSmall, 1.0 / lambda.value};
}

DensityEval asympt_small(double c, double t) {
  require_ct(c, t, "asympt_small");
  if (!(t < 1.0)) throw DomainError("asympt_small: requires t < 1");
  DensityEval e = asympt_small(c, Lambda::from_t(t));
  e.t = t;
  return e;
}

DensityEval density_closed(double c, double t) {
  require_ct(c, t, "density_closed");
  constexpr double kRelErr = 1e-15;
  if (c == 1.0) return make_eval(c, t, -t, kRelErr, Method::ClosedForm);
  if (c == 2.0) {
    const double x = 2.0 * std::sqrt(t);
    return make_eval(c, t, std::log(2.0 * bessel_k0_scaled(x)) - x, kRelErr, Method::ClosedForm);
  }
  throw DomainError("density_closed: closed forms exist only for c = 1 and c = 2");
}

DensityEval density(double c, double t, const QuadSpec& spec) {
  require_ct(c, t, "density");
  spec.validate();
  if (t > 1.0 && c * std::pow(t, 1.0 / c) > kCancellationCap) return density_shifted(c, t, spec);
  if (t < 1.0 && -std::log(t) > kLoweredLineSwitch) {
    const LoweredGrid grid = lowered_grid(c, t, spec);
    // Budget for the initial grid plus two refinements.
    const double required = 4.0 * 2.0 * grid.half_width / grid.step;
    if (required > static_cast<double>(spec.max_nodes)) return asympt_small(c, t);
    try {
      return density_lowered(c, t, spec);
    } catch (const NoConvergence&) {
      // Ran out of nodes after all.
      return asympt_small(c, t);
    }
  }
  return density_direct(c, t, spec);
}

double log_density_at(double c, double log_t, const QuadSpec& spec) {
  constexpr double kLogRange = 700.0;
  // Beyond t^{1/c} = e^300 the leading term is exact in double precision.
  constexpr double kLogTauMax = 300.0;
  if (log_t > kLogRange || log_t > kLogTauMax * c) {
    const double tau = std::exp(log_t / c);
    return 0.5 * (c - 1.0) * kLogTwoPi - 0.5 * std::log(c) - c * tau -
           (c - 1.0) / (2.0 * c) * log_t;
  }
  if (log_t < -kLogRange) return asympt_small(c, Lambda{-log_t}).log_value;
  return density(c, std::exp(log_t), spec).log_value;
}

}  // namespace urbanik
