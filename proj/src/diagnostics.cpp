#include "urbanik/diagnostics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>

#include "urbanik/bessel.hpp"
#include "urbanik/errors.hpp"

namespace urbanik {
namespace {

constexpr double kPi = std::numbers::pi;
const Cx kI(0.0, 1.0);

// Outer quadratures resolve the integral well below the check tolerance.
QuadSpec outer_spec(double check_tol) {
  QuadSpec s;
  s.target_rel_tol = std::min(1e-9, 1e-3 * check_tol);
  return s;
}

// Same, for checks whose tolerance is absolute (the expected value may be 0).
QuadSpec outer_spec_abs(double check_tol) {
  QuadSpec s = outer_spec(check_tol);
  s.target_abs_tol = 1e-3 * check_tol;
  return s;
}

class Timer {
 public:
  long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report finish(Report r, const Timer& timer) {
  r.runtime_ms = timer.elapsed_ms();
  r.decide();
  return r;
}

Report make_report(std::string name, std::vector<std::pair<std::string, double>> inputs,
                   std::vector<double> observed, std::vector<double> expected) {
  Report r;
  r.check_name = std::move(name);
  r.inputs = std::move(inputs);
  r.observed = std::move(observed);
  r.expected = std::move(expected);
  return r;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

// int_0^inf t^{z - ix} e_c(t) dt with t = u^p:
//   int_0^inf p u^{p(1+z) - 1} e^{-i p x log u} e_c(u^p) du.
// p = c makes the tail decay like e^{-cu}; p >= 1/(1+z) keeps the power of u
// at 0 non-negative, since a weak singularity there defeats the end test.
Cx weighted_moment(double c, double z, double x, const QuadSpec& spec, const char* what) {
  const double p = std::max(c, 1.0 / (1.0 + z));
  auto f = [&](double u) {
    const double log_u = std::log(u);
    const double log_mag = std::log(p) + (p * (1.0 + z) - 1.0) * log_u + log_density_at(c, p * log_u);
    if (log_mag == -INFINITY) return Cx(0.0);
    return std::exp(Cx(log_mag, -p * x * log_u));
  };
  return tanh_sinh_halfline(f, spec).require_converged(what).value;
}

double log_density_or_closed(double c, double t) {
  if (c == 1.0 || c == 2.0) return density_closed(c, t).log_value;
  return density(c, t).log_value;
}

}  // namespace

void Report::decide() { pass = std::isfinite(max_abs_dev) && max_abs_dev <= tolerance; }

Report check_moment(double c, int n, double rel_tol) {
  require(c > 0.0 && c <= 4.0, "check_moment: requires 0 < c <= 4");
  require(n >= 0 && n <= 8, "check_moment: requires 0 <= n <= 8");
  Timer timer;
  const double observed = weighted_moment(c, n, 0.0, outer_spec(rel_tol), "check_moment").real();
  const double expected = std::exp(c * std::lgamma(n + 1.0));
  Report r = make_report("moment", {{"c", c}, {"n", static_cast<double>(n)}}, {observed}, {expected});
  r.max_abs_dev = std::abs(observed - expected);
  r.tolerance = rel_tol * expected;
  return finish(r, timer);
}

Report check_mellin(double c, double z, double rel_tol) {
  require(c > 0.0 && c <= 4.0, "check_mellin: requires 0 < c <= 4");
  require(z > -0.9 && z <= 8.0, "check_mellin: requires -0.9 < z <= 8");
  Timer timer;
  const double observed = weighted_moment(c, z, 0.0, outer_spec(rel_tol), "check_mellin").real();
  const double expected = gamma_pow(Cx(1.0 + z, 0.0), c).real();
  Report r = make_report("mellin", {{"c", c}, {"z", z}}, {observed}, {expected});
  r.max_abs_dev = std::abs(observed - expected);
  r.tolerance = rel_tol * expected;
  return finish(r, timer);
}

Report check_fourier(double c, double x, double tol) {
  require(c > 0.0 && c <= 4.0, "check_fourier: requires 0 < c <= 4");
  Timer timer;
  const Cx observed = weighted_moment(c, 0.0, x, outer_spec_abs(tol), "check_fourier");
  const Cx expected = gamma_pow(Cx(1.0, -x), c);
  Report r = make_report("fourier",
           {{"c", c}, {"x", x}},
           {observed.real(), observed.imag()},
           {expected.real(), expected.imag()});
  r.max_abs_dev = std::abs(observed - expected);
  r.tolerance = tol;
  return finish(r, timer);
}

Report check_semigroup(double c, double d, double t, double rel_tol) {
  require(c > 0.0 && d > 0.0 && c + d <= 4.0, "check_semigroup: requires c, d > 0, c + d <= 4");
  require(t >= 0.1 && t <= 20.0, "check_semigroup: requires t in [0.1, 20]");
  Timer timer;
  const double log_t = std::log(t);
  const QuadSpec spec = outer_spec(rel_tol);
  auto direct = [&](double x) {
    const double lx = std::log(x);
    return Cx(std::exp(log_density_at(c, log_t - lx) + log_density_at(d, lx) - lx));
  };
  auto inverted = [&](double x) {
    const double lx = std::log(x);
    return Cx(std::exp(log_density_at(c, log_t + lx) + log_density_at(d, -lx) - lx));
  };
  const double v1 = tanh_sinh_halfline(direct, spec).require_converged("check_semigroup").value.real();
  const double v2 =
      tanh_sinh_halfline(inverted, spec).require_converged("check_semigroup").value.real();
  const double expected = std::exp(log_density_or_closed(c + d, t));
  Report r = make_report("semigroup", {{"c", c}, {"d", d}, {"t", t}}, {v1, v2}, {expected});
  r.max_abs_dev = std::max(std::abs(v1 - expected), std::abs(v2 - expected));
  r.tolerance = rel_tol * expected;
  return finish(r, timer);
}

Report check_complete_monotonicity(double c, const std::vector<double>& grid, int order,
                                   double tol) {
  require(c >= 1.0, "check_complete_monotonicity: requires c >= 1");
  require(order >= 0 && order <= 4, "check_complete_monotonicity: requires 0 <= order <= 4");
  require(grid.size() >= static_cast<std::size_t>(order) + 2,
          "check_complete_monotonicity: grid too short for the order");
  const double delta = grid[1] - grid[0];
  require(grid.front() > 0.0 && delta > 0.0, "check_complete_monotonicity: grid must be positive and increasing");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    require(std::abs(grid[i] - grid[i - 1] - delta) <= 1e-9 * delta,
            "check_complete_monotonicity: grid spacing must be uniform");
  }
  Timer timer;
  std::vector<double> diff(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) diff[i] = density(c, grid[i]).value;

  double worst = 0.0;
  std::vector<double> observed;
  double sign = 1.0;
  double scale = 1.0;
  for (int j = 0; j <= order; ++j) {
    double min_scaled = INFINITY;
    for (double v : diff) min_scaled = std::min(min_scaled, sign * v / scale);
    observed.push_back(min_scaled);
    worst = std::max(worst, -min_scaled);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
    sign = -sign;
    scale *= delta;
  }
  Report r = make_report("complete_monotonicity",
           {{"c", c}, {"t0", grid.front()}, {"delta", delta}, {"points", static_cast<double>(grid.size())},
            {"order", static_cast<double>(order)}},
           observed,
           {});
  r.expected_law = "(-1)^j Delta^j e_c / delta^j >= -tol for j = 0..order";
  r.max_abs_dev = worst;
  r.tolerance = tol;
  return finish(r, timer);
}

namespace {

// Smallest eigenvalue and largest diagonal entry of the matrix A.
std::pair<double, double> negdef_spectrum(const std::vector<double>& x) {
  const auto m = static_cast<Eigen::Index>(x.size());
  auto rho = [](double y) { return -log_gamma(Cx(1.0, -y)); };
  std::vector<Cx> r(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) r[j] = rho(x[j]);
  Eigen::MatrixXcd a(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      a(j, k) = r[j] + std::conj(r[k]) - rho(x[j] - x[k]);
    }
  }
  const Eigen::MatrixXcd h = (a + a.adjoint()) / 2.0;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
  const double max_diag = h.diagonal().real().maxCoeff();
  return {eig.eigenvalues().minCoeff(), max_diag};
}

}  // namespace

Report check_negative_definite(const std::vector<double>& points, double rel_tol) {
  require(!points.empty() && points.size() <= 12, "check_negative_definite: requires 1..12 points");
  for (std::size_t j = 0; j < points.size(); ++j) {
    require(std::isfinite(points[j]), "check_negative_definite: points must be finite");
    for (std::size_t k = 0; k < j; ++k) {
      require(points[j] != points[k], "check_negative_definite: points must be distinct");
    }
  }
  Timer timer;
  const auto [min_eig, max_diag] = negdef_spectrum(points);
  Report r = make_report("negative_definite", {}, {min_eig}, {});
  for (std::size_t j = 0; j < points.size(); ++j) {
    r.inputs.emplace_back("x" + std::to_string(j), points[j]);
  }
  r.expected_law = "min eigenvalue >= -tol (1 + max diag)";
  r.max_abs_dev = std::max(0.0, -min_eig);
  r.tolerance = rel_tol * (1.0 + max_diag);
  return finish(r, timer);
}

Report check_negative_definite_random(int trials, int max_points, unsigned long long seed) {
  require(trials >= 1 && max_points >= 1 && max_points <= 12,
          "check_negative_definite_random: requires trials >= 1 and 1 <= max_points <= 12");
  Timer timer;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::uniform_int_distribution<int> size(1, max_points);
  double worst_ratio = -INFINITY;
  Report worst;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> x(static_cast<std::size_t>(size(rng)));
    for (double& v : x) v = coord(rng);
    Report one = check_negative_definite(x);
    const double ratio = -one.observed.front() / one.tolerance;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = one;
    }
  }
  worst.check_name = "negative_definite_random";
  worst.inputs.insert(worst.inputs.begin(),
                      {{"trials", static_cast<double>(trials)},
                       {"max_points", static_cast<double>(max_points)},
                       {"seed", static_cast<double>(seed)}});
  return finish(worst, timer);
}

Report check_malmsten(Cx z, double tol) {
  require(z.real() > 0.0, "check_malmsten: requires Re z > 0");
  Timer timer;
  const Cx zm1 = z - 1.0;
  auto f = [&](double s) -> Cx {
    if (s < 1e-4) {
      // Limit series of the integrand; the closed form cancels here.
      const Cx z2 = z - 2.0;
      return zm1 * z2 / 2.0 - s * z2 * zm1 * (2.0 * z + 3.0) / 12.0 +
             s * s * z2 * zm1 * (z * z + z + 2.0) / 24.0;
    }
    const double e = std::exp(-s);
    return (zm1 * e - (e - std::exp(-z * s)) / (-std::expm1(-s))) / s;
  };
  const Cx observed = tanh_sinh_halfline(f, outer_spec_abs(tol)).require_converged("check_malmsten").value;
  const Cx expected = log_gamma(z);
  Report r = make_report("malmsten",
           {{"z_re", z.real()}, {"z_im", z.imag()}},
           {observed.real(), observed.imag()},
           {expected.real(), expected.imag()});
  r.max_abs_dev = std::abs(observed - expected);
  r.tolerance = tol;
  return finish(r, timer);
}

Report check_hankel_inverse_gamma(double c, double tol) {
  require(c > 0.0 && std::isfinite(c), "check_hankel_inverse_gamma: requires c > 0");
  Timer timer;
  const QuadSpec spec = outer_spec_abs(tol);
  auto g = [&](Cx w) { return std::exp(-c * std::log(-w) - w); };
  const Cx upper = tanh_sinh_halfline([&](double x) { return g(Cx(x, 1.0)); }, spec)
                       .require_converged("check_hankel_inverse_gamma")
                       .value;
  const Cx lower = tanh_sinh_halfline([&](double x) { return g(Cx(x, -1.0)); }, spec)
                       .require_converged("check_hankel_inverse_gamma")
                       .value;
  // theta runs from -pi/2 down to -3pi/2, hence the minus sign.
  const Cx arc = -tanh_sinh_interval(
                      [&](double th) {
                        const Cx w = std::polar(1.0, th);
                        return g(w) * kI * w;
                      },
                      -1.5 * kPi, -0.5 * kPi, spec)
                      .require_converged("check_hankel_inverse_gamma")
                      .value;
  const Cx observed = (upper - lower + arc) / (2.0 * kPi * kI);
  const double expected = std::exp(-std::lgamma(c));
  Report r = make_report("hankel_inverse_gamma", {{"c", c}}, {observed.real(), observed.imag()}, {expected, 0.0});
  r.max_abs_dev = std::abs(observed - expected);
  r.tolerance = tol;
  return finish(r, timer);
}

Report check_binet_bound(int samples, unsigned long long seed) {
  require(samples >= 1, "check_binet_bound: requires samples >= 1");
  Timer timer;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_r(std::log(1e-2), std::log(1e3));
  std::uniform_real_distribution<double> imag(-1e3, 1e3);
  double worst = -INFINITY;
  double worst_r = 0.0;
  double worst_s = 0.0;
  int violations = 0;
  for (int k = 0; k < samples; ++k) {
    const double r = std::exp(log_r(rng));
    const double s = imag(rng);
    const double excess = std::abs(binet_mu(Cx(r, s))) - 1.0 / (12.0 * r);
    if (excess > 0.0) ++violations;
    if (excess > worst) {
      worst = excess;
      worst_r = r;
      worst_s = s;
    }
  }
  Report rep = make_report("binet_bound",
             {{"samples", static_cast<double>(samples)}, {"seed", static_cast<double>(seed)}},
             {static_cast<double>(violations), worst, worst_r, worst_s},
             {0.0});
  rep.expected_law = "|mu(r+is)| <= 1/(12 r) at every sample";
  rep.max_abs_dev = std::max(0.0, worst);
  rep.tolerance = 0.0;
  return finish(rep, timer);
}

Report check_moment_matrix(double c, int size) {
  require(c > 0.0 && size >= 1 && size <= 8, "check_moment_matrix: requires c > 0, 1 <= size <= 8");
  Timer timer;
  Eigen::MatrixXd h(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) h(i, j) = std::exp(c * std::lgamma(i + j + 1.0));
  }
  const Eigen::VectorXd d = h.diagonal().cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd normalized = d.asDiagonal() * h * d.asDiagonal();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normalized, Eigen::EigenvaluesOnly);
  const double min_eig = eig.eigenvalues().minCoeff();
  Report r = make_report("moment_matrix", {{"c", c}, {"size", static_cast<double>(size)}}, {min_eig}, {});
  r.expected_law = "smallest eigenvalue > 0";
  r.max_abs_dev = min_eig > 0.0 ? 0.0 : 1.0 - min_eig;
  r.tolerance = 0.0;
  return finish(r, timer);
}

Report check_closed_form(double c, const std::vector<double>& ts, double rel_tol) {
  require(c == 1.0 || c == 2.0, "check_closed_form: requires c in {1, 2}");
  require(!ts.empty(), "check_closed_form: empty grid");
  Timer timer;
  Report r = make_report("closed_form", {{"c", c}}, {}, {});
  double worst = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double t = ts[k];
    const double observed = density(c, t).value;
    const double expected = c == 1.0 ? std::exp(-t) : 2.0 * bessel_k0(2.0 * std::sqrt(t));
    r.inputs.emplace_back("t" + std::to_string(k), t);
    r.observed.push_back(observed);
    r.expected.push_back(expected);
    worst = std::max(worst, std::abs(observed - expected) / expected);
  }
  r.max_abs_dev = worst;
  r.tolerance = rel_tol;
  r.expected_law = "max relative deviation";
  return finish(r, timer);
}

Report check_cross_method(double c, const std::vector<double>& ts, double rel_tol) {
  require(!ts.empty(), "check_cross_method: empty grid");
  Timer timer;
  Report r = make_report("cross_method", {{"c", c}}, {}, {});
  double worst = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double t = ts[k];
    const double direct = density_direct(c, t).value;
    const double shifted = density_shifted(c, t).value;
    r.inputs.emplace_back("t" + std::to_string(k), t);
    r.observed.push_back(direct);
    r.expected.push_back(shifted);
    worst = std::max(worst, std::abs(direct - shifted) / shifted);
  }
  r.max_abs_dev = worst;
  r.tolerance = rel_tol;
  r.expected_law = "max relative deviation of Direct from Shifted";
  return finish(r, timer);
}

std::vector<AsymptRow> asympt_ratio_rows(double c, const std::vector<double>& ts, AsymptMode mode) {
  std::vector<AsymptRow> rows;
  rows.reserve(ts.size());
  for (double t : ts) {
    AsymptRow row;
    row.t = t;
    const bool closed = c == 1.0 || c == 2.0;
    row.density = closed ? density_closed(c, t) : density(c, t);
    if (mode == AsymptMode::Large) {
      row.asymptotic = asympt_large(c, t);
    } else {
      require(t < 1.0, "asympt_ratio_rows: small-t mode requires t < 1");
      row.asymptotic = asympt_small(c, t);
    }
    if (mode == AsymptMode::Large) {
      row.ratio = large_t_ratio(c, t).ratio;
      row.scaled_residual = (row.ratio - 1.0) * std::pow(t, 1.0 / c);
    } else {
      const double log_ratio = row.density.log_value - row.asymptotic.log_value;
      row.ratio = std::exp(log_ratio);
      row.scaled_residual = std::expm1(log_ratio) * -std::log(t);
    }
    rows.push_back(row);
  }
  return rows;
}

bool asympt_runaway(const std::vector<double>& s) {
  if (s.size() < 3) return false;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!(std::abs(s[k]) > std::abs(s[k - 1]))) return false;
  }
  const double first = std::abs(s[1]) - std::abs(s[0]);
  const double last = std::abs(s.back()) - std::abs(s[s.size() - 2]);
  return last >= first;
}

Report check_asymptotics(double c, const std::vector<double>& ts, AsymptMode mode, double bound) {
  Timer timer;
  const auto rows = asympt_ratio_rows(c, ts, mode);
  Report r = make_report(mode == AsymptMode::Large ? "asympt_large" : "asympt_small", {{"c", c}}, {}, {});
  std::vector<double> s;
  double worst = 0.0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    r.inputs.emplace_back("t" + std::to_string(k), rows[k].t);
    r.observed.push_back(rows[k].scaled_residual);
    s.push_back(rows[k].scaled_residual);
    worst = std::max(worst, std::abs(rows[k].scaled_residual));
  }
  r.expected_law = mode == AsymptMode::Large
                       ? "|ratio - 1| t^{1/c} bounded and not runaway"
                       : "|ratio - 1| log(1/t) bounded";
  r.max_abs_dev = worst;
  r.tolerance = bound;
  r = finish(r, timer);
  if (mode == AsymptMode::Large && asympt_runaway(s)) r.pass = false;
  return r;
}

const char* krein_class_name(KreinClass k) {
  return k == KreinClass::Convergent ? "CONVERGENT" : "DIVERGENT";
}

namespace {

double krein_log_density(double c, double t) {
  if (t > kKreinAsymptStart) return asympt_large(c, t).log_value;
  return log_density_or_closed(c, t);
}

}  // namespace

KreinTrace krein_integral(double c, const std::vector<double>& truncations) {
  require(c > 0.0 && std::isfinite(c), "krein_integral: requires c > 0");
  require(truncations.size() >= 3, "krein_integral: needs at least three truncation points");
  for (std::size_t k = 0; k < truncations.size(); ++k) {
    require(truncations[k] > 1.0 && truncations[k] <= 1e8, "krein_integral: T_k must lie in (1, 1e8]");
    require(k == 0 || truncations[k] > truncations[k - 1], "krein_integral: T_k must increase");
  }
  QuadSpec spec;
  spec.target_rel_tol = 1e-10;

  // [0, 1] with t = s^2 removes the 1/sqrt(t) singularity.
  auto head = [&](double s) {
    return Cx(2.0 * krein_log_density(c, s * s) / (1.0 + s * s));
  };
  double total = tanh_sinh_interval(head, 0.0, 1.0, spec).require_converged("krein_integral").value.real();

  // Beyond 1 in y = log t, with a breakpoint where the integrand switches
  // to the asymptotic form.
  auto tail = [&](double y) {
    const double t = std::exp(y);
    return Cx(krein_log_density(c, t) * std::exp(0.5 * y) / (1.0 + t));
  };
  auto segment = [&](double a, double b) {
    double sum = 0.0;
    const double knot = std::log(kKreinAsymptStart);
    if (a < knot && knot < b) {
      sum += tanh_sinh_interval(tail, a, knot, spec).require_converged("krein_integral").value.real();
      a = knot;
    }
    return sum + tanh_sinh_interval(tail, a, b, spec).require_converged("krein_integral").value.real();
  };

  KreinTrace trace;
  trace.c = c;
  trace.truncations = truncations;
  double y_prev = 0.0;
  for (double t_k : truncations) {
    const double y = std::log(t_k);
    total += segment(y_prev, y);
    trace.partial_integrals.push_back(total);
    y_prev = y;
  }

  const auto& i = trace.partial_integrals;
  const auto& tk = trace.truncations;
  const std::size_t n = i.size();
  const double d_last = std::abs(i[n - 1] - i[n - 2]);
  const double d_prev = std::abs(i[n - 2] - i[n - 3]);
  // Geometric mean ratio of the last two truncation steps.
  const double log_step = 0.5 * std::log(tk[n - 1] / tk[n - 3]);
  trace.tail_exponent = std::log(d_last / d_prev) / log_step;
  trace.predicted_tail_exponent = 1.0 / c - 0.5;
  const bool convergent = d_last < kKreinIncrementTol || trace.tail_exponent <= kKreinExponentMargin;
  trace.classification = convergent ? KreinClass::Convergent : KreinClass::Divergent;
  return trace;
}

Report check_krein(double c, const std::vector<double>& truncations) {
  Timer timer;
  const KreinTrace trace = krein_integral(c, truncations);
  const KreinClass expected = c > 2.0 ? KreinClass::Convergent : KreinClass::Divergent;
  Report r = make_report("krein", {{"c", c}}, trace.partial_integrals, {});
  for (std::size_t k = 0; k < truncations.size(); ++k) {
    r.inputs.emplace_back("T" + std::to_string(k), truncations[k]);
  }
  r.observed.push_back(trace.tail_exponent);
  r.expected.push_back(trace.predicted_tail_exponent);
  r.expected_law = std::string("classification ") + krein_class_name(expected) + ", observed " +
                   krein_class_name(trace.classification);
  r.max_abs_dev = trace.classification == expected ? 0.0 : 1.0;
  r.tolerance = 0.0;
  return finish(r, timer);
}

std::vector<Report> run_suite() {
  std::vector<Report> out;
  const std::vector<double> closed_grid{0.01, 0.1, 1.0, 5.0, 10.0, 20.0};
  out.push_back(check_closed_form(1.0, closed_grid, 1e-8));
  out.push_back(check_closed_form(2.0, closed_grid, 1e-7));
  for (double c : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    for (int n = 0; n <= 6; ++n) out.push_back(check_moment(c, n));
  }
  for (double c : {0.5, 2.0}) {
    for (double z : {-0.5, 0.5, 1.5}) out.push_back(check_mellin(c, z));
  }
  for (double c : {0.5, 1.5}) {
    for (double x : {0.0, 0.5, -0.5, 1.0, -1.0}) out.push_back(check_fourier(c, x));
  }
  const std::pair<double, double> pairs[] = {{1.0, 1.0}, {0.75, 0.75}, {1.0, 0.5}};
  for (const auto& [c, d] : pairs) {
    for (double t : {0.5, 1.0, 2.0, 5.0}) out.push_back(check_semigroup(c, d, t));
  }
  std::vector<double> grid;
  for (int k = 0; k <= 16; ++k) grid.push_back(1.0 + 0.25 * k);
  for (double c : {1.0, 1.5, 2.0, 2.5}) out.push_back(check_complete_monotonicity(c, grid, 3));
  for (double c : {0.5, 1.5, 2.0, 3.0}) {
    out.push_back(check_asymptotics(c, {1e2, 1e3, 1e4, 1e5}, AsymptMode::Large));
  }
  for (double c : {0.5, 1.5, 2.0, 3.0}) {
    out.push_back(check_asymptotics(c, {1e-3, 1e-5, 1e-7}, AsymptMode::Small));
  }
  const std::vector<double> truncations{1e2, 1e3, 1e4, 1e5, 1e6};
  for (double c : {1.0, 1.5, 2.0, 2.5, 3.0, 4.0}) out.push_back(check_krein(c, truncations));
  out.push_back(check_negative_definite_random(100, 8, 20240601));
  for (Cx z : {Cx(2.0), Cx(0.5), Cx(1.0, -1.0), Cx(3.0, 2.0)}) out.push_back(check_malmsten(z));
  for (double c : {2.5, 3.0, 4.0}) out.push_back(check_hankel_inverse_gamma(c));
  out.push_back(check_binet_bound(1000, 7));
  for (double c : {0.5, 1.0, 1.5, 2.0}) out.push_back(check_moment_matrix(c));
  for (double c : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) out.push_back(check_cross_method(c, {2.0, 4.0, 8.0}, 1e-7));
  return out;
}

}  // namespace urbanik
