#pragma once

// One-dimensional quadrature: the trapezoid rule along straight lines in the
// complex plane, and double-exponential rules on (0, inf) and [a, b].

#include <functional>

#include "urbanik/complex_gamma.hpp"

namespace urbanik {

struct QuadSpec {
  double target_abs_tol = 1e-300;
  double target_rel_tol = 1e-12;
  long max_nodes = 1L << 17;

  /// Throws DomainError unless both tolerances are > 0 and max_nodes >= 64.
  void validate() const;
};

struct QuadResult {
  Cx value{0.0, 0.0};
  double abs_err_estimate = 0.0;
  long nodes_used = 0;
  /// False when the node budget ran out, or (half-line rule) when the
  /// integrand is not negligible at the truncated ends.
  bool converged = false;
  /// Quadrature of |f|; sets the round-off floor of the error estimate.
  double l1_norm = 0.0;

  /// Throws NoConvergence (with `what` in the message) if not converged.
  const QuadResult& require_converged(const char* what) const;
};

/// Horizontal line L_a = {x + ia} or vertical line V_a = {a + iy}, truncated
/// to parameter range [-half_width, half_width] and sampled with `step`.
struct LineContour {
  enum class Orientation { Horizontal, Vertical };

  Orientation orientation = Orientation::Horizontal;
  double offset = 0.0;
  double half_width = 8.0;
  double step = 0.5;

  static LineContour horizontal(double offset, double half_width, double step);
  static LineContour vertical(double offset, double half_width, double step);

  /// half_width / step must be an integer >= 8 and offset finite.
  void validate() const;

  Cx point(double s) const;
  /// dz/ds along the line.
  Cx direction() const;
};

/// Smallest multiple of `step` that is >= max(half_width, 8 step).
double round_half_width(double half_width, double step);

/// Step-halving composite trapezoid value of the contour integral of f over
/// the truncated line.  Stops when two successive refinements differ by less
/// than max(abs_tol, rel_tol |value|, round-off floor).  Not converged, too,
/// when the end nodes' share of the sum exceeds that tolerance: the line was
/// truncated too early.  The end share is included in abs_err_estimate.
QuadResult trapezoid_line(const std::function<Cx(Cx)>& f, const LineContour& contour,
                          const QuadSpec& spec);

/// exp-sinh rule for f on (0, inf).  Integrable endpoint singularities at 0
/// are fine; non-finite integrand values throw DomainError.
QuadResult tanh_sinh_halfline(const std::function<Cx(double)>& f, const QuadSpec& spec);

/// tanh-sinh rule for f on [a, b], a < b finite.
QuadResult tanh_sinh_interval(const std::function<Cx(double)>& f, double a, double b,
                              const QuadSpec& spec);

/// Half-width X >= 4 such that the part of
///   (1/2pi) int t^{ix-1} Gamma(1-ix)^c dx
/// beyond |x| > X has absolute value below tol, from the Gamma envelope.
double truncation_for_density(double c, double t, double tol);

}  // namespace urbanik
