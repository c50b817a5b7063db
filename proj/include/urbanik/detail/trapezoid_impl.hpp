#pragma once

#include <cmath>
#include <limits>

namespace urbanik::detail {

/// Neumaier-compensated running sum; summation order is the call order, so
/// results are reproducible bit for bit.
template <class Real>
class CompensatedSum {
 public:
  void add(Real x) {
    using std::abs;
    const Real t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  Real value() const { return sum_ + carry_; }

 private:
  Real sum_ = 0;
  Real carry_ = 0;
};

template <class Real, class Complex>
class ComplexSum {
 public:
  void add(const Complex& z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return Complex(re_.value(), im_.value()); }

 private:
  CompensatedSum<Real> re_;
  CompensatedSum<Real> im_;
};

template <class Real, class Complex>
struct TrapezoidOutcome {
  Complex value;
  Real last_difference;
  Real l1_norm;
  long nodes_used;
  bool converged;
};

/// Multiplier of epsilon * ||f||_1 below which refinement differences are
/// indistinguishable from round-off.
inline constexpr double kRoundoffFactor = 64.0;

/// Composite trapezoid for g(s) on [-half_width, half_width] with step
/// halving.  half_width / step must be an integer.
template <class Real, class Complex, class F>
TrapezoidOutcome<Real, Complex> refine_trapezoid(F&& g, Real half_width, Real step, Real abs_tol,
                                                 Real rel_tol, long max_nodes) {
  using std::abs;
  const long n = std::lround(static_cast<double>(half_width / step));
  ComplexSum<Real, Complex> sum;
  CompensatedSum<Real> l1;
  for (long k = -n; k <= n; ++k) {
    const Real weight = (k == -n || k == n) ? Real(0.5) : Real(1);
    const Complex v = g(Real(k) * step) * weight;
    sum.add(v);
    l1.add(abs(v));
  }
  long nodes = 2 * n + 1;
  long intervals = 2 * n;
  Real h = step;
  Complex estimate = sum.value() * h;
  const Real eps = std::numeric_limits<Real>::epsilon();

  TrapezoidOutcome<Real, Complex> out{estimate, Real(0), l1.value() * h, nodes, false};
  while (nodes + intervals <= max_nodes) {
    h /= 2;
    for (long k = 0; k < intervals; ++k) {
      const Complex v = g(-half_width + Real(2 * k + 1) * h);
      sum.add(v);
      l1.add(abs(v));
    }
    nodes += intervals;
    intervals *= 2;
    const Complex refined = sum.value() * h;
    const Real diff = abs(refined - estimate);
    const Real l1_norm = l1.value() * h;
    Real tol = abs_tol;
    if (rel_tol * abs(refined) > tol) tol = rel_tol * abs(refined);
    const Real floor = Real(kRoundoffFactor) * eps * l1_norm;
    if (floor > tol) tol = floor;
    estimate = refined;
    out = {refined, diff, l1_norm, nodes, diff < tol};
    if (out.converged) break;
  }
  return out;
}

}  // namespace urbanik::detail
