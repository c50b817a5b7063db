#pragma once

// Densities e_c(t), t > 0, of the product-convolution semigroup whose
// moments are (n!)^c:
//
//   e_c(t) = (1/2pi) int_R t^{ix-1} Gamma(1-ix)^c dx.
//
// Several independent evaluation routes are provided so that they can check
// each other; `density` picks one automatically.

#include <string_view>

#include "urbanik/complex_gamma.hpp"
#include "urbanik/quadrature.hpp"

namespace urbanik {

enum class Method { Direct, Shifted, AsymptLarge, AsymptSmall, ClosedForm };

std::string_view method_name(Method m);

struct DensityEval {
  double c = 0.0;
  double t = 0.0;
  double value = 0.0;
  /// Natural log of the density.  Finite where `value` underflows (large t),
  /// -inf only when the value is exactly zero.
  double log_value = 0.0;
  double abs_err_estimate = 0.0;
  Method method = Method::Direct;
  /// Relative error estimate; kept separately because it stays meaningful
  /// when `value` underflows.
  double rel_err = 0.0;

  double rel_err_estimate() const { return rel_err; }
};

/// Lambda = log(1/t) > 0, the large parameter of the t -> 0 behaviour.
struct Lambda {
  double value;

  /// Throws DomainError unless 0 < t < 1.
  static Lambda from_t(double t);
};

/// Cancellation budget of the direct route in double precision (about five
/// significant digits survive at the cap).  The dispatcher switches to the
/// shifted contour (t > 1) or the small-t asymptotic (t < 1) beyond it.
inline constexpr double kCancellationCap = 25.0;
/// Between the two caps density_direct runs the same quadrature in
/// binary128; beyond this it throws CancellationError.
inline constexpr double kExtendedCancellationCap = 60.0;

/// For t < 1 the dispatcher uses density_lowered once log(1/t) exceeds this.
inline constexpr double kLoweredLineSwitch = 10.0;

/// max(c t^{1/c}, log(1/t)): log of the ratio of the integrand's L1 norm to
/// the density, i.e. the number of nats lost to cancellation.
double direct_cancellation_exponent(double c, double t);

/// Trapezoid step that resolves the t^{ix} oscillation: 2pi / (|log t| + pi).
double direct_step_limit(double t);

/// Fourier inversion along the real line.  Throws CancellationError when the
/// cancellation exponent exceeds kExtendedCancellationCap.
DensityEval density_direct(double c, double t, const QuadSpec& spec = {});

/// Inversion along the line Im z = t^{1/c} - 1 through the saddle point,
/// with the exponentially small factor e^{-c t^{1/c}} carried analytically.
/// Requires t > 1.
DensityEval density_shifted(double c, double t, const QuadSpec& spec = {});

/// Inversion along the line Im x = min(0, c / log(1/t) - 1), which passes
/// close to the pole of Gamma(1 - ix) at x = -i.  The integrand's L1 norm is
/// then comparable with the density, so small t loses no digits.  Requires
/// t < 1; the result is tagged Method::Shifted.
DensityEval density_lowered(double c, double t, const QuadSpec& spec = {});

/// Leading large-t term
///   (2pi)^{(c-1)/2} / sqrt(c) * exp(-c t^{1/c}) / t^{(c-1)/(2c)}.
DensityEval asympt_large(double c, double t);

struct LargeTRatio {
  double ratio;
  double rel_err;
  Method method;
};

/// e_c(t) / asympt_large(c, t).  On the shifted route the ratio comes
/// straight from the saddle integral, so it keeps full relative precision
/// even when c t^{1/c} is far beyond the range where e^{-c t^{1/c}} can be
/// represented or subtracted in logs.  Closed forms are used for c in {1, 2}.
LargeTRatio large_t_ratio(double c, double t, const QuadSpec& spec = {});

/// Leading small-t term Lambda^{c-1} / Gamma(c), 0 < t < 1.
DensityEval asympt_small(double c, double t);
DensityEval asympt_small(double c, Lambda lambda);

/// e_1(t) = e^{-t} and e_2(t) = 2 K_0(2 sqrt t).  DomainError for other c.
DensityEval density_closed(double c, double t);

/// Dispatcher: density_shifted for t > 1 with c t^{1/c} > kCancellationCap,
/// density_lowered for log(1/t) > kLoweredLineSwitch (AsymptSmall if its
/// node count would exceed max_nodes), density_direct otherwise.
DensityEval density(double c, double t, const QuadSpec& spec = {});

/// log e_c(e^{log_t}) for any real log_t, including arguments whose
/// exponential over- or underflows.  Uses the dispatcher inside the double
/// range and the matching leading asymptotic form outside it, or once
/// t^{1/c} > e^300, where the large-t leading term is exact to rounding.
double log_density_at(double c, double log_t, const QuadSpec& spec = {});

/// Phase f(u) = iu + (1-iu) Log(1-iu) of the saddle-point integrand; a
/// series is used for |u| < 1/4 to avoid cancellation.
Cx saddle_phase(double u);

}  // namespace urbanik
