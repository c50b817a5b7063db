#include <doctest.h>

#include <cmath>
#include <numbers>

#include "urbanik/errors.hpp"
#include "urbanik/quadrature.hpp"

using urbanik::Cx;
using urbanik::LineContour;
using urbanik::QuadSpec;

namespace {

const double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(std::numbers::pi);

}  // namespace

TEST_CASE("QuadSpec validation") {
  CHECK_NOTHROW(QuadSpec{}.validate());
  CHECK_THROWS_AS((QuadSpec{0.0, 1e-10, 1000}.validate()), urbanik::DomainError);
  CHECK_THROWS_AS((QuadSpec{1e-10, -1.0, 1000}.validate()), urbanik::DomainError);
  CHECK_THROWS_AS((QuadSpec{1e-10, 1e-10, 63}.validate()), urbanik::DomainError);
  CHECK_NOTHROW((QuadSpec{1e-10, 1e-10, 64}.validate()));
}

TEST_CASE("LineContour validation") {
  CHECK_NOTHROW(LineContour::horizontal(0.0, 4.0, 0.5).validate());
  CHECK_THROWS_AS(LineContour::horizontal(0.0, 3.0, 0.5).validate(), urbanik::DomainError);
  CHECK_THROWS_AS(LineContour::horizontal(0.0, 4.1, 0.5).validate(), urbanik::DomainError);
  CHECK_THROWS_AS(LineContour::vertical(NAN, 4.0, 0.5).validate(), urbanik::DomainError);
  CHECK(urbanik::round_half_width(1.0, 0.5) == 4.0);
  CHECK(urbanik::round_half_width(7.3, 0.5) == 7.5);
  const double w = urbanik::round_half_width(10.01, 0.3);
  CHECK(w >= 10.01);
  CHECK(std::abs(w / 0.3 - std::round(w / 0.3)) < 1e-9);
}

TEST_CASE("contour points and direction") {
  const auto h = LineContour::horizontal(0.5, 4.0, 0.5);
  CHECK(h.point(2.0) == Cx(2.0, 0.5));
  CHECK(h.direction() == Cx(1.0, 0.0));
  const auto v = LineContour::vertical(-1.0, 4.0, 0.5);
  CHECK(v.point(2.0) == Cx(-1.0, 2.0));
  CHECK(v.direction() == Cx(0.0, 1.0));
}

TEST_CASE("trapezoid: Gaussian on horizontal lines") {
  auto f = [](Cx z) { return std::exp(-z * z); };
  for (double a : {0.0, 0.5}) {
    const auto r = urbanik::trapezoid_line(f, LineContour::horizontal(a, 8.0, 1.0), {});
    CAPTURE(a);
    CHECK(r.converged);
    CHECK(std::abs(r.value - kSqrtPi) < 1e-13);
    CHECK(r.abs_err_estimate >= 0.0);
    CHECK(r.nodes_used >= 8);
  }
}

TEST_CASE("trapezoid: vertical line") {
  // int over V_0 of e^{z^2} dz = i int e^{-y^2} dy.
  auto f = [](Cx z) { return std::exp(z * z); };
  const auto r = urbanik::trapezoid_line(f, LineContour::vertical(0.0, 8.0, 1.0), {});
  CHECK(r.converged);
  CHECK(std::abs(r.value - Cx(0.0, kSqrtPi)) < 1e-13);
}

TEST_CASE("trapezoid: exponential density via Gamma(1 - ix)") {
  // (1/2pi) int t^{ix-1} Gamma(1-ix) dx = e^{-t} at t = 1.
  auto f = [](Cx x) { return std::exp(urbanik::log_gamma(1.0 - Cx(0, 1) * x)); };
  const double X = urbanik::truncation_for_density(1.0, 1.0, 1e-15);
  const double h = 0.5;
  const auto r = urbanik::trapezoid_line(
      f, LineContour::horizontal(0.0, urbanik::round_half_width(X, h), h), {});
  CHECK(r.converged);
  CHECK(std::abs(r.value / (2.0 * kPi) - std::exp(-1.0)) < 1e-13);
}

TEST_CASE("trapezoid reports an exhausted node budget") {
  auto f = [](Cx z) { return std::exp(-z * z) * std::cos(40.0 * z); };
  QuadSpec tight{1e-300, 1e-15, 64};
  const auto r = urbanik::trapezoid_line(f, LineContour::horizontal(0.0, 8.0, 1.0), tight);
  CHECK_FALSE(r.converged);
  CHECK_THROWS_AS(r.require_converged("test"), urbanik::NoConvergence);
}

TEST_CASE("exp-sinh on the half line") {
  const QuadSpec spec{};
  auto gauss = [](double x) { return Cx(std::exp(-x * x)); };
  auto r = urbanik::tanh_sinh_halfline(gauss, spec);
  CHECK(r.converged);
  CHECK(std::abs(r.value - kSqrtPi / 2.0) < 1e-13);

  auto singular = [](double x) { return Cx(std::exp(-x) / std::sqrt(x)); };
  r = urbanik::tanh_sinh_halfline(singular, spec);
  CHECK(r.converged);
  CHECK(std::abs(r.value - kSqrtPi) < 1e-12);
  CHECK(std::abs(r.value - kSqrtPi) <= r.abs_err_estimate + 1e-15);
}

TEST_CASE("exp-sinh flags non-integrable integrands") {
  const QuadSpec spec{};
  auto at_zero = [](double x) { return Cx(std::exp(-x) / x); };
  CHECK_FALSE(urbanik::tanh_sinh_halfline(at_zero, spec).converged);
  auto at_inf = [](double x) { return Cx(1.0 / (1.0 + x)); };
  CHECK_FALSE(urbanik::tanh_sinh_halfline(at_inf, spec).converged);
}

TEST_CASE("exp-sinh rejects non-finite integrand values") {
  auto bad = [](double x) { return Cx(x > 1.0 ? NAN : 1.0); };
  CHECK_THROWS_AS(urbanik::tanh_sinh_halfline(bad, {}), urbanik::DomainError);
}

TEST_CASE("tanh-sinh on an interval") {
  const QuadSpec spec{};
  auto r = urbanik::tanh_sinh_interval([](double x) { return Cx(std::log(x)); }, 0.0, 1.0, spec);
  CHECK(std::abs(r.value + 1.0) < 1e-12);
  r = urbanik::tanh_sinh_interval([](double x) { return Cx(1.0 / std::sqrt(x)); }, 0.0, 1.0, spec);
  CHECK(std::abs(r.value - 2.0) < 1e-12);
  r = urbanik::tanh_sinh_interval([](double x) { return Cx(std::sqrt(1.0 - x * x)); }, -1.0, 1.0,
                                  spec);
  CHECK(std::abs(r.value - kPi / 2.0) < 1e-13);
  CHECK_THROWS_AS(
      urbanik::tanh_sinh_interval([](double) { return Cx(1.0); }, 1.0, 1.0, spec),
      urbanik::DomainError);
}

TEST_CASE("quadrature is linear in the integrand") {
  const QuadSpec spec{};
  auto f = [](double x) { return Cx(std::exp(-x), std::sin(x) * std::exp(-2.0 * x)); };
  auto g = [](double x) { return Cx(x * std::exp(-x * x), 0.0); };
  const Cx a(2.0, -0.5);
  const auto rf = urbanik::tanh_sinh_halfline(f, spec);
  const auto rg = urbanik::tanh_sinh_halfline(g, spec);
  const auto rs = urbanik::tanh_sinh_halfline([&](double x) { return a * f(x) + g(x); }, spec);
  CHECK(std::abs(rs.value - (a * rf.value + rg.value)) < 1e-12);
}

TEST_CASE("error estimates bound the actual error") {
  const QuadSpec loose{1e-300, 1e-6, 1L << 17};
  auto f = [](double x) { return Cx(std::pow(x, 2.5) * std::exp(-x)); };
  const double exact = std::tgamma(3.5);
  const auto r = urbanik::tanh_sinh_halfline(f, loose);
  CHECK(r.converged);
  CHECK(std::abs(r.value - exact) <= r.abs_err_estimate);

  auto g = [](Cx z) { return std::exp(-z * z / 4.0); };
  const auto q = urbanik::trapezoid_line(g, LineContour::horizontal(0.0, 16.0, 2.0), loose);
  CHECK(std::abs(q.value - 2.0 * kSqrtPi) <= q.abs_err_estimate + 1e-15);
}

TEST_CASE("truncation_for_density bounds the neglected tail") {
  for (double c : {0.5, 1.0, 2.0, 3.0}) {
    for (double t : {0.1, 1.0, 5.0}) {
      for (double tol : {1e-8, 1e-14}) {
        const double X = urbanik::truncation_for_density(c, t, tol);
        CAPTURE(c);
        CAPTURE(t);
        CAPTURE(tol);
        CHECK(X >= 4.0);
        // Two-sided tail of |Gamma(1-ix)|^c / (2 pi t), from X to infinity.
        auto tail = [&](double s) {
          const double x = X + s;
          return Cx(2.0 * std::exp(c * urbanik::log_gamma(Cx(1.0, -x)).real()) / (2.0 * kPi * t));
        };
        const auto r = urbanik::tanh_sinh_halfline(tail, {});
        CHECK(r.value.real() <= tol);
      }
    }
  }
}

TEST_CASE("trapezoid flags a truncation that is too short") {
  auto f = [](Cx z) { return std::exp(-z * z); };
  const auto r = urbanik::trapezoid_line(f, LineContour::horizontal(0.0, 1.0, 0.125), {});
  CHECK_FALSE(r.converged);
  CHECK(r.abs_err_estimate > 1e-12 * std::abs(r.value));
  CHECK(std::abs(r.value - kSqrtPi) > 0.1);
}

TEST_CASE("exp-sinh: exponential density has unit mass") {
  const auto r = urbanik::tanh_sinh_halfline([](double x) { return Cx(std::exp(-x)); }, {});
  CHECK(r.converged);
  CHECK(std::abs(r.value - 1.0) < 1e-12);
}

TEST_CASE("truncation_for_density: faster decay and floor") {
  CHECK(urbanik::truncation_for_density(4.0, 1.0, 1e-14) <
        urbanik::truncation_for_density(1.0, 1.0, 1e-14));
  CHECK(urbanik::truncation_for_density(1.0, 1.0, 1e-2) >= 4.0);
  const double X = urbanik::truncation_for_density(1.0, 1.0, 1e-14);
  const auto env = urbanik::gamma_abs_envelope(1.0);
  CHECK(env.prefactor * std::exp(-kPi * X / 2.0) * std::sqrt(X) < 2.0 * kPi * 1e-14);
}
