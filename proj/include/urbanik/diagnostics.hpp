#pragma once

// Numerical checks of the identities satisfied by the densities e_c.  Each
// check returns a Report; pass is decided by comparing max_abs_dev with the
// check's tolerance, both in absolute terms (relative tolerances are scaled
// by |expected| before they are stored).

#include <string>
#include <utility>
#include <vector>

#include "urbanik/complex_gamma.hpp"
#include "urbanik/density.hpp"
#include "urbanik/quadrature.hpp"

namespace urbanik {

struct Report {
  std::string check_name;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<double> observed;
  std::vector<double> expected;
  /// Set instead of (or besides) `expected` when the prediction is a law
  /// rather than a number.
  std::string expected_law;
  double max_abs_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  long runtime_ms = 0;

  /// Recomputes pass from max_abs_dev and tolerance.
  void decide();
};

/// Default tolerances of the individual checks.
inline constexpr double kMomentRelTol = 1e-6;
inline constexpr double kMellinRelTol = 1e-6;
inline constexpr double kFourierTol = 1e-5;
inline constexpr double kSemigroupRelTol = 1e-5;
inline constexpr double kMonotonicityTol = 1e-4;
inline constexpr double kNegDefRelTol = 1e-8;
inline constexpr double kMalmstenTol = 1e-8;
inline constexpr double kHankelTol = 1e-8;
inline constexpr double kAsymptResidualBound = 10.0;

/// int_0^inf t^n e_c(t) dt against (n!)^c, with 0 <= n <= 8 and 0 < c <= 4.
/// The integral runs over u with t = u^c, where the tail decays like e^{-cu}.
Report check_moment(double c, int n, double rel_tol = kMomentRelTol);

/// int_0^inf t^z e_c(t) dt against Gamma(1 + z)^c, z > -0.9.
Report check_mellin(double c, double z, double rel_tol = kMellinRelTol);

/// int_0^inf t^{-ix} e_c(t) dt against Gamma(1 - ix)^c (absolute tolerance).
Report check_fourier(double c, double x, double tol = kFourierTol);

/// int_0^inf e_c(t/x) e_d(x) dx/x against e_{c+d}(t).  The same integral is
/// also evaluated after x -> 1/x; the report carries both values and the
/// larger deviation.  Requires c + d <= 4 and t in [0.1, 20].
Report check_semigroup(double c, double d, double t, double rel_tol = kSemigroupRelTol);

/// (-1)^j Delta^j e_c >= -tol delta^j on a uniform grid for j = 0..order.
/// max_abs_dev is the largest violation scaled by delta^-j (0 when none).
Report check_complete_monotonicity(double c, const std::vector<double>& grid, int order,
                                   double tol = kMonotonicityTol);

/// Positive semidefiniteness of A_jk = rho(x_j) + conj(rho(x_k)) - rho(x_j - x_k),
/// rho(x) = -log_gamma(1 - ix), for m <= 12 distinct points.
Report check_negative_definite(const std::vector<double>& points, double rel_tol = kNegDefRelTol);

/// `trials` random point sets of 1..max_points points in [-5, 5] (fixed
/// seed); the report holds the worst trial.
Report check_negative_definite_random(int trials, int max_points, unsigned long long seed);

/// Malmsten's integral for log Gamma(z), Re z > 0, against log_gamma(z).
Report check_malmsten(Cx z, double tol = kMalmstenTol);

/// Hankel's integral (1/2 pi i) int_H (-w)^{-c} e^{-w} dw over the contour
///   {x - i : x = inf..0} + {e^{i theta} : theta = -pi/2..-3pi/2} + {x + i : x = 0..inf}
/// against 1 / Gamma(c).
Report check_hankel_inverse_gamma(double c, double tol = kHankelTol);

/// |mu(r + is)| <= 1/(12 r) at `samples` pseudo-random points with a fixed seed;
/// r is log-uniform in [1e-2, 1e3] and s uniform in [-1e3, 1e3].
Report check_binet_bound(int samples, unsigned long long seed);

/// Hankel moment matrices [s_{i+j}]_{0<=i,j<=size-1}, s_n = (n!)^c, are
/// positive definite.  observed holds the smallest eigenvalue of the
/// diagonally normalized matrix.
Report check_moment_matrix(double c, int size = 4);

/// |density(c,t) - closed form| / closed form on a t grid, c in {1, 2}.
Report check_closed_form(double c, const std::vector<double>& ts, double rel_tol);

/// |Direct - Shifted| / Shifted on a t grid (each t > 1).
Report check_cross_method(double c, const std::vector<double>& ts, double rel_tol);

enum class AsymptMode { Large, Small };

struct AsymptRow {
  double t = 0.0;
  DensityEval density;
  DensityEval asymptotic;
  double ratio = 0.0;
  double scaled_residual = 0.0;
};

/// ratio = density / leading term; scaled_residual = (ratio - 1) t^{1/c}
/// (Large) or (ratio - 1) Lambda (Small).  Large-t ratios come from
/// large_t_ratio, small-t ratios from logs, so underflow is harmless.
std::vector<AsymptRow> asympt_ratio_rows(double c, const std::vector<double>& ts, AsymptMode mode);

/// Boundedness of the scaled residuals: max |scaled_residual| <= bound and,
/// in large-t mode, no runaway growth (see asympt_runaway).
Report check_asymptotics(double c, const std::vector<double>& ts, AsymptMode mode,
                         double bound = kAsymptResidualBound);

/// True when |s| increases at every step and its last increment is at least
/// as large as its first; a residual settling to a constant has shrinking
/// increments and is not runaway.
bool asympt_runaway(const std::vector<double>& scaled_residuals);

enum class KreinClass { Convergent, Divergent };

const char* krein_class_name(KreinClass k);

struct KreinTrace {
  double c = 0.0;
  std::vector<double> truncations;
  std::vector<double> partial_integrals;
  KreinClass classification = KreinClass::Divergent;
  /// log(D_k / D_{k-1}) / log(T_k / T_{k-1}) over the last two intervals,
  /// D_k = |I(T_k) - I(T_{k-1})|.
  double tail_exponent = 0.0;
  /// 1/c - 1/2, the exponent of D_k for geometric truncations.
  double predicted_tail_exponent = 0.0;
};

/// Convergent when the last increment is below 1e-3, or when the
/// increments shrink with exponent <= kKreinExponentMargin.
inline constexpr double kKreinIncrementTol = 1e-3;
inline constexpr double kKreinExponentMargin = -0.05;
/// log e_c is taken from the large-t leading term beyond this point.
inline constexpr double kKreinAsymptStart = 1e3;

/// Partial integrals I(T_k) of int_0^T log e_c(t) / (sqrt(t) (1 + t)) dt.
/// T_k must be increasing, > 1, and at most 1e8; at least three are needed.
KreinTrace krein_integral(double c, const std::vector<double>& truncations);

/// krein_integral wrapped as a report; expected classification is
/// Convergent exactly when c > 2.
Report check_krein(double c, const std::vector<double>& truncations);

/// The standard battery in declaration order.
std::vector<Report> run_suite();

}  // namespace urbanik
