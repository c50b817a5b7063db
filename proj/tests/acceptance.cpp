// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "urbanik/complex_gamma.hpp"
#include "urbanik/diagnostics.hpp"

namespace {

using namespace urbanik;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int number;
  const char* title;
  double time_limit_s;  // <= 0: no limit
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// All reports pass; detail is the worst max_abs_dev / tolerance.
Outcome all_pass(const std::vector<Report>& reports) {
  bool pass = !reports.empty();
  double worst = 0.0;
  for (const auto& r : reports) {
    pass = pass && r.pass;
    if (r.tolerance > 0.0) worst = std::max(worst, r.max_abs_dev / r.tolerance);
    else if (r.max_abs_dev > 0.0) worst = INFINITY;
  }
  return {pass, std::to_string(reports.size()) + fmt(" checks, worst dev/tol %.3g", worst)};
}

Outcome closed(double c, double tol) {
  const Report r = check_closed_form(c, {0.01, 0.1, 1.0, 5.0, 10.0, 20.0}, tol);
  return {r.pass, fmt("max rel dev %.3g (tol %g)", r.max_abs_dev, tol)};
}

Outcome moments() {
  std::vector<Report> out;
  for (double c : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    for (int n = 0; n <= 6; ++n) out.push_back(check_moment(c, n, 1e-6));
  }
  return all_pass(out);
}

Outcome mellin() {
  std::vector<Report> out;
  for (double c : {0.5, 2.0}) {
    for (double z : {-0.5, 0.5, 1.5}) out.push_back(check_mellin(c, z, 1e-6));
  }
  return all_pass(out);
}

Outcome semigroup() {
  std::vector<Report> out;
  const std::pair<double, double> pairs[] = {{1.0, 1.0}, {0.75, 0.75}, {1.0, 0.5}};
  for (const auto& [c, d] : pairs) {
    for (double t : {0.5, 1.0, 2.0, 5.0}) out.push_back(check_semigroup(c, d, t, 1e-5));
  }
  return all_pass(out);
}

Outcome asymptotics(AsymptMode mode) {
  const std::vector<double> ts = mode == AsymptMode::Large
                                     ? std::vector<double>{1e2, 1e3, 1e4, 1e5}
                                     : std::vector<double>{1e-3, 1e-5, 1e-7};
  bool pass = true;
  double worst = 0.0;
  for (double c : {0.5, 1.5, 2.0, 3.0}) {
    const Report r = check_asymptotics(c, ts, mode, 10.0);
    pass = pass && r.pass;
    worst = std::max(worst, r.max_abs_dev);
  }
  return {pass, fmt("max |scaled residual| %.3g (bound 10)", worst)};
}

Outcome krein() {
  const std::vector<double> T{1e2, 1e3, 1e4, 1e5, 1e6};
  bool pass = true;
  std::string detail;
  for (double c : {1.0, 1.5, 2.0, 2.5, 3.0, 4.0}) {
    const KreinTrace tr = krein_integral(c, T);
    const KreinClass want = c > 2.0 ? KreinClass::Convergent : KreinClass::Divergent;
    pass = pass && tr.classification == want;
    if (!detail.empty()) detail += ' ';
    detail += fmt("c=%g:", c) + krein_class_name(tr.classification);
  }
  return {pass, detail};
}

Outcome negdef() {
  const Report r = check_negative_definite_random(100, 8, 20240601);
  return {r.pass, fmt("worst min eigenvalue %.3g", r.observed.at(0))};
}

Outcome hankel() {
  std::vector<Report> out;
  for (double c : {2.5, 3.0, 4.0}) out.push_back(check_hankel_inverse_gamma(c, 1e-8));
  return all_pass(out);
}

Outcome binet() {
  const Report r = check_binet_bound(1000, 7);
  return {r.pass, fmt("%g violations in 1000 samples", r.observed.at(0))};
}

Outcome cross() {
  bool pass = true;
  double worst = 0.0;
  for (double c : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    const Report r = check_cross_method(c, {2.0, 4.0, 8.0}, 1e-7);
    pass = pass && r.pass;
    worst = std::max(worst, r.max_abs_dev);
  }
  return {pass, fmt("max rel dev %.3g (tol 1e-7)", worst)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed form c=1", 5.0, [] { return closed(1.0, 1e-8); }},
      {2, "closed form c=2", 10.0, [] { return closed(2.0, 1e-7); }},
      {3, "moments", 60.0, moments},
      {4, "Mellin transform", 0.0, mellin},
      {5, "semigroup", 120.0, semigroup},
      {6, "large-t asymptotics", 0.0, [] { return asymptotics(AsymptMode::Large); }},
      {7, "small-t asymptotics", 0.0, [] { return asymptotics(AsymptMode::Small); }},
      {8, "Krein threshold", 30.0, krein},
      {9, "negative definiteness", 0.0, negdef},
      {10, "Hankel identity", 0.0, hankel},
      {11, "Binet bound", 0.0, binet},
      {12, "Direct vs Shifted", 0.0, cross},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass;
    std::string timing = fmt("%.2f s", secs);
    if (c.time_limit_s > 0.0) {
      timing += fmt(" (limit %g s)", c.time_limit_s);
      pass = pass && secs < c.time_limit_s;
    }
    std::printf("criterion %d: %s  %s; %s; %s\n", c.number, pass ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
