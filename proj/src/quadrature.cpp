#include "urbanik/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "urbanik/detail/trapezoid_impl.hpp"
#include "urbanik/errors.hpp"

namespace urbanik {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Double-exponential grids start at h = 1/2 and halve at most this many times.
constexpr int kMaxLevels = 12;
constexpr double kInitialStep = 0.5;
// exp-sinh nodes span x in [e^-192, e^192] (s in [-5.5, 5.5]).
constexpr int kHalflineHalfCount = 11;
// tanh-sinh nodes reach within e^-85 of each end (s in [-4, 4]).
constexpr int kIntervalHalfCount = 8;
// Level-0 nodes below this fraction of the largest term are not refined.
constexpr double kTrimFraction = 1e-20;

bool finite(Cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

struct Node {
  double x;
  double w;
};

// Generic double-exponential driver.  `node(s)` maps the grid parameter to an
// abscissa and weight; terms are f(x) w.
template <class NodeMap>
QuadResult double_exponential(const std::function<Cx(double)>& f, NodeMap node, int half_count,
                              const QuadSpec& spec, const char* who) {
  spec.validate();
  auto term = [&](double s) {
    const Node nd = node(s);
    if (nd.w == 0.0) return Cx(0.0);
    const Cx v = f(nd.x);
    if (!finite(v)) {
      throw DomainError(std::string(who) + ": integrand not finite at x = " + std::to_string(nd.x));
    }
    return v * nd.w;
  };

  std::vector<Cx> level0(2 * half_count + 1);
  detail::ComplexSum<double, Cx> sum;
  detail::CompensatedSum<double> l1;
  double largest = 0.0;
  for (int k = -half_count; k <= half_count; ++k) {
    const Cx v = term(k * kInitialStep);
    level0[k + half_count] = v;
    sum.add(v);
    l1.add(std::abs(v));
    largest = std::max(largest, std::abs(v));
  }
  int lo = -half_count;
  int hi = half_count;
  while (lo < hi && std::abs(level0[lo + half_count]) <= kTrimFraction * largest) ++lo;
  while (hi > lo && std::abs(level0[hi + half_count]) <= kTrimFraction * largest) --hi;
  const double s_lo = std::max(lo - 1, -half_count) * kInitialStep;
  const double s_hi = std::min(hi + 1, half_count) * kInitialStep;

  double h = kInitialStep;
  long nodes = 2L * half_count + 1;
  Cx estimate = sum.value() * h;
  QuadResult out{estimate, std::abs(estimate), nodes, false, l1.value() * h};

  for (int level = 1; level <= kMaxLevels; ++level) {
    const long fresh = std::lround((s_hi - s_lo) / h);
    if (nodes + fresh > spec.max_nodes) break;
    h /= 2.0;
    for (long j = 0; j < fresh; ++j) {
      const Cx v = term(s_lo + (2 * j + 1) * h);
      sum.add(v);
      l1.add(std::abs(v));
    }
    nodes += fresh;
    const Cx refined = sum.value() * h;
    const double diff = std::abs(refined - estimate);
    const double l1_norm = l1.value() * h;
    const double floor = detail::kRoundoffFactor * kEps * l1_norm;
    const double tol = std::max({spec.target_abs_tol, spec.target_rel_tol * std::abs(refined), floor});
    estimate = refined;
    out = {refined, std::max(diff, floor), nodes, diff < tol, l1_norm};
    if (out.converged) break;
  }

  // A non-negligible term at the outermost node means the truncation of the
  // infinite grid is not under control (divergent or too slowly decaying f).
  const double edge = std::max(std::abs(level0.front()), std::abs(level0.back())) * kInitialStep;
  const double edge_tol =
      std::max(spec.target_abs_tol, spec.target_rel_tol * std::abs(out.value));
  if (edge > edge_tol) {
    out.converged = false;
    out.abs_err_estimate = std::max(out.abs_err_estimate, edge);
  }
  return out;
}

}  // namespace

void QuadSpec::validate() const {
  if (!(target_abs_tol > 0.0) || !(target_rel_tol > 0.0)) {
    throw DomainError("QuadSpec: tolerances must be > 0");
  }
  if (max_nodes < 64) throw DomainError("QuadSpec: max_nodes must be >= 64");
}

const QuadResult& QuadResult::require_converged(const char* what) const {
  if (!converged) {
    throw NoConvergence(std::string(what) + ": quadrature did not converge (error estimate " +
                        std::to_string(abs_err_estimate) + ", " + std::to_string(nodes_used) +
                        " nodes)");
  }
  return *this;
}

LineContour LineContour::horizontal(double offset, double half_width, double step) {
  LineContour c{Orientation::Horizontal, offset, half_width, step};
  c.validate();
  return c;
}

LineContour LineContour::vertical(double offset, double half_width, double step) {
  LineContour c{Orientation::Vertical, offset, half_width, step};
  c.validate();
  return c;
}

void LineContour::validate() const {
  if (!std::isfinite(offset)) throw DomainError("LineContour: offset must be finite");
  if (!(half_width > 0.0) || !(step > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("LineContour: half_width and step must be > 0");
  }
  const double ratio = half_width / step;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio || std::round(ratio) < 8.0) {
    throw DomainError("LineContour: half_width / step must be an integer >= 8");
  }
}

Cx LineContour::point(double s) const {
  return orientation == Orientation::Horizontal ? Cx(s, offset) : Cx(offset, s);
}

Cx LineContour::direction() const {
  return orientation == Orientation::Horizontal ? Cx(1.0, 0.0) : Cx(0.0, 1.0);
}

double round_half_width(double half_width, double step) {
  const double n = std::max(8.0, std::ceil(half_width / step - 1e-12));
  return n * step;
}

QuadResult trapezoid_line(const std::function<Cx(Cx)>& f, const LineContour& contour,
                          const QuadSpec& spec) {
  spec.validate();
  contour.validate();
  const Cx dz = contour.direction();
  auto g = [&](double s) {
    const Cx v = f(contour.point(s));
    if (!finite(v)) {
      throw DomainError("trapezoid_line: integrand not finite at s = " + std::to_string(s));
    }
    return v * dz;
  };
  const auto r = detail::refine_trapezoid<double, Cx>(g, contour.half_width, contour.step,
                                                      spec.target_abs_tol, spec.target_rel_tol,
                                                      spec.max_nodes);
  const double floor = detail::kRoundoffFactor * kEps * r.l1_norm;
  // Trapezoid weight of the two end nodes: a lower bound for the mass cut off
  // by truncating the line, so a half-width that is too small is flagged.
  const double h = 2.0 * contour.half_width / static_cast<double>(r.nodes_used - 1);
  const double ends =
      0.5 * h * (std::abs(g(-contour.half_width)) + std::abs(g(contour.half_width)));
  const double tol =
      std::max({spec.target_abs_tol, spec.target_rel_tol * std::abs(r.value), floor});
  return QuadResult{r.value, std::max(r.last_difference, floor) + ends, r.nodes_used,
                    r.converged && ends <= tol, r.l1_norm};
}

QuadResult tanh_sinh_halfline(const std::function<Cx(double)>& f, const QuadSpec& spec) {
  auto node = [](double s) {
    const double e = kPi / 2.0 * std::sinh(s);
    const double x = std::exp(e);
    return Node{x, kPi / 2.0 * std::cosh(s) * x};
  };
  return double_exponential(f, node, kHalflineHalfCount, spec, "tanh_sinh_halfline");
}

QuadResult tanh_sinh_interval(const std::function<Cx(double)>& f, double a, double b,
                              const QuadSpec& spec) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("tanh_sinh_interval: requires finite a < b");
  }
  const double width = b - a;
  auto node = [=](double s) {
    const double u = kPi / 2.0 * std::sinh(s);
    const double ch = std::cosh(u);
    const double w = width * kPi / 2.0 * std::cosh(s) / (2.0 * ch * ch);
    // Distance to the nearer end, computed without cancellation.
    const double gap = width / (1.0 + std::exp(2.0 * std::abs(u)));
    const double x = u < 0.0 ? a + gap : b - gap;
    if (x <= a || x >= b) return Node{x, 0.0};
    return Node{x, w};
  };
  return double_exponential(f, node, kIntervalHalfCount, spec, "tanh_sinh_interval");
}

double truncation_for_density(double c, double t, double tol) {
  if (!(c > 0.0) || !(t > 0.0) || !(tol > 0.0)) {
    throw DomainError("truncation_for_density: c, t, tol must be > 0");
  }
  const GammaEnvelope env = gamma_abs_envelope(c);
  const double rate = c * kPi / 2.0;
  const double power = c / 2.0;
  // Both tails: (2 / 2pi t) K_c int_X^inf e^{-rate x} x^power dx, bounded by
  // (1 / pi t) K_c e^{-rate X} X^power / (rate - power / X).
  auto log_tail = [&](double x) {
    return std::log(env.prefactor / (kPi * t)) - rate * x + power * std::log(x) -
           std::log(rate - power / x);
  };
  const double target = std::log(tol);
  double lo = 4.0;
  if (log_tail(lo) <= target) return lo;
  double hi = 8.0;
  while (log_tail(hi) > target) hi *= 2.0;
  for (int it = 0; it < 100 && hi - lo > 1e-9 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (log_tail(mid) > target ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace urbanik
