// urbanik-sf: evaluate e_c(t), print tables, and run the diagnostic checks.
//
// Exit codes: 0 success, 1 a check failed (or a numerical failure), 2 bad
// arguments.  Errors are reported as a record on stderr in the requested
// format.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "urbanik/density.hpp"
#include "urbanik/diagnostics.hpp"
#include "urbanik/errors.hpp"
#include "urbanik/report_io.hpp"

namespace {

using namespace urbanik;

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "csv";
  std::string out;
  double rel_tol = QuadSpec{}.target_rel_tol;
  double abs_tol = QuadSpec{}.target_abs_tol;
  long max_nodes = QuadSpec{}.max_nodes;

  QuadSpec spec() const {
    QuadSpec s{abs_tol, rel_tol, max_nodes};
    s.validate();
    return s;
  }
};

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ArgumentError("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw ArgumentError("not a number: '" + s + "'");
  return v;
}

// "start:stop:count"; log spacing unless `linear`.
std::vector<double> parse_range(const std::string& spec, bool linear) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() == 1) return {parse_real(parts[0])};
  if (parts.size() != 3) throw ArgumentError("range must be start:stop:count, got '" + spec + "'");
  const double a = parse_real(parts[0]);
  const double b = parse_real(parts[1]);
  const double n_real = parse_real(parts[2]);
  const long n = std::lround(n_real);
  if (n < 2 || static_cast<double>(n) != n_real) {
    throw ArgumentError("range count must be an integer >= 2, got '" + parts[2] + "'");
  }
  if (!(b > a)) throw ArgumentError("range needs start < stop, got '" + spec + "'");
  if (!linear && !(a > 0.0)) throw ArgumentError("log-spaced range needs start > 0");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    const double f = static_cast<double>(k) / static_cast<double>(n - 1);
    out[k] = linear ? a + f * (b - a) : std::exp(std::log(a) + f * (std::log(b) - std::log(a)));
  }
  out.front() = a;
  out.back() = b;
  return out;
}

std::vector<double> expand(const std::vector<std::string>& specs, bool linear) {
  std::vector<double> out;
  for (const auto& s : specs) {
    const auto part = parse_range(s, linear);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

void require_positive(const std::vector<double>& xs, const char* name) {
  if (xs.empty()) throw ArgumentError(std::string("--") + name + " is required");
  for (double x : xs) {
    if (!(x > 0.0)) throw ArgumentError(std::string("--") + name + " values must be > 0");
  }
}

DensityEval evaluate(const std::string& method, double c, double t, const QuadSpec& spec) {
  if (method == "auto") return density(c, t, spec);
  if (method == "direct") return density_direct(c, t, spec);
  if (method == "shifted") return density_shifted(c, t, spec);
  if (method == "lowered") return density_lowered(c, t, spec);
  if (method == "asympt-large") return asympt_large(c, t);
  if (method == "asympt-small") return asympt_small(c, t);
  if (method == "closed") return density_closed(c, t);
  throw ArgumentError("unknown method '" + method + "'");
}

void emit(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(common.out, std::ios::binary);
  if (!f) throw ArgumentError("cannot open output file '" + common.out + "'");
  f << text;
}

int reports_exit(const std::vector<Report>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return 1;
  }
  return 0;
}

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", common.out, "Write to this file instead of stdout");
  sub->add_option("--rel-tol", common.rel_tol, "Quadrature relative tolerance");
  sub->add_option("--abs-tol", common.abs_tol, "Quadrature absolute tolerance");
  sub->add_option("--max-nodes", common.max_nodes, "Quadrature node budget");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Urbanik product-convolution semigroup densities e_c(t)"};
  app.require_subcommand(1);
  Common common;

  std::vector<std::string> c_args;
  std::vector<std::string> t_args;
  bool linear = false;
  std::string method = "auto";

  auto* eval = app.add_subcommand("eval", "Evaluate e_c(t) for every pair of --c and --t");
  eval->add_option("--c", c_args, "c values (repeatable, ranges allowed)")->required();
  eval->add_option("--t", t_args, "t values (repeatable, ranges allowed)")->required();
  eval->add_option("--method", method,
                   "auto, direct, shifted, lowered, asympt-large, asympt-small, closed");
  eval->add_flag("--linear", linear, "Linear spacing for ranges");
  add_common(eval, common);

  auto* table = app.add_subcommand("table", "Table of e_c(t) over a t range");
  table->add_option("--c", c_args, "c values")->required();
  table->add_option("--t", t_args, "t range start:stop:count (log-spaced by default)")->required();
  table->add_option("--method", method, "Evaluation method, as for eval");
  table->add_flag("--linear", linear, "Linear spacing");
  add_common(table, common);

  std::vector<int> n_args;
  double check_tol = -1.0;
  auto* moments = app.add_subcommand("moments", "Check int t^n e_c(t) dt = (n!)^c");
  moments->add_option("--c", c_args, "c values in (0, 4]")->required();
  moments->add_option("--n", n_args, "Moment orders 0..8 (default 0..6)");
  moments->add_option("--tol", check_tol, "Relative tolerance");
  add_common(moments, common);

  std::vector<std::string> d_args;
  auto* semigroup = app.add_subcommand("semigroup", "Check e_c * e_d = e_{c+d} (product convolution)");
  semigroup->add_option("--c", c_args, "c values")->required();
  semigroup->add_option("--d", d_args, "d values")->required();
  semigroup->add_option("--t", t_args, "t values in [0.1, 20]")->required();
  semigroup->add_option("--tol", check_tol, "Relative tolerance");
  add_common(semigroup, common);

  std::vector<std::string> big_t_args;
  auto* krein = app.add_subcommand("krein", "Partial Krein integrals and their classification");
  krein->add_option("--c", c_args, "c values")->required();
  krein->add_option("--T", big_t_args, "Truncation points (default 1e2:1e6:5)");
  add_common(krein, common);

  std::string mode_arg;
  auto* asympt = app.add_subcommand("asympt", "Ratio of e_c to its leading asymptotic term");
  asympt->add_option("--c", c_args, "c values")->required();
  asympt->add_option("--t", t_args, "t grid (ranges allowed)")->required();
  asympt->add_option("--mode", mode_arg, "large or small (default: from the grid)")
      ->check(CLI::IsMember({"large", "small"}));
  add_common(asympt, common);

  bool timings = false;
  auto* verify = app.add_subcommand("verify-all", "Run the full diagnostic battery");
  verify->add_flag("--timings", timings, "Include runtime_ms in the output");
  add_common(verify, common);

  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    Format f = Format::Csv;
    if (common.format == "json") f = Format::Json;
    std::cerr << write_error(code, kind, message, f);
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    for (int k = 1; k + 1 < argc; ++k) {
      if (std::string(argv[k]) == "--format") common.format = argv[k + 1];
    }
    return fail(2, "argument", e.what());
  }

  try {
    const Format format = parse_format(common.format);
    const QuadSpec spec = common.spec();

    if (eval->parsed() || table->parsed()) {
      const auto cs = expand(c_args, linear);
      const auto ts = expand(t_args, linear);
      require_positive(cs, "c");
      require_positive(ts, "t");
      if (table->parsed() && ts.size() < 2) throw ArgumentError("table needs a t range");
      std::vector<DensityEval> rows;
      for (double c : cs) {
        for (double t : ts) rows.push_back(evaluate(method, c, t, spec));
      }
      emit(common, write_density(rows, format));
      return 0;
    }

    if (moments->parsed()) {
      const auto cs = expand(c_args, false);
      require_positive(cs, "c");
      if (n_args.empty()) n_args = {0, 1, 2, 3, 4, 5, 6};
      std::vector<Report> reports;
      for (double c : cs) {
        for (int n : n_args) {
          reports.push_back(check_tol > 0 ? check_moment(c, n, check_tol) : check_moment(c, n));
        }
      }
      emit(common, write_reports(reports, format));
      return reports_exit(reports);
    }

    if (semigroup->parsed()) {
      const auto cs = expand(c_args, false);
      const auto ds = expand(d_args, false);
      const auto ts = expand(t_args, false);
      require_positive(cs, "c");
      require_positive(ds, "d");
      require_positive(ts, "t");
      std::vector<Report> reports;
      for (double c : cs) {
        for (double d : ds) {
          for (double t : ts) {
            reports.push_back(check_tol > 0 ? check_semigroup(c, d, t, check_tol)
                                            : check_semigroup(c, d, t));
          }
        }
      }
      emit(common, write_reports(reports, format));
      return reports_exit(reports);
    }

    if (krein->parsed()) {
      const auto cs = expand(c_args, false);
      require_positive(cs, "c");
      const auto truncations = big_t_args.empty() ? parse_range("1e2:1e6:5", false)
                                                  : expand(big_t_args, false);
      std::vector<KreinTrace> traces;
      for (double c : cs) traces.push_back(krein_integral(c, truncations));
      emit(common, write_krein(traces, format));
      return 0;
    }

    if (asympt->parsed()) {
      const auto cs = expand(c_args, false);
      const auto ts = expand(t_args, false);
      require_positive(cs, "c");
      require_positive(ts, "t");
      AsymptMode mode = AsymptMode::Large;
      if (mode_arg == "small") {
        mode = AsymptMode::Small;
      } else if (mode_arg.empty()) {
        bool all_small = true;
        for (double t : ts) all_small = all_small && t < 1.0;
        if (all_small) mode = AsymptMode::Small;
      }
      std::vector<AsymptTable> tables;
      for (double c : cs) tables.push_back({c, mode, asympt_ratio_rows(c, ts, mode)});
      emit(common, write_asympt(tables, format));
      return 0;
    }

    if (verify->parsed()) {
      const auto reports = run_suite();
      emit(common, write_reports(reports, format, timings));
      return reports_exit(reports);
    }
  } catch (const ArgumentError& e) {
    return fail(2, "argument", e.what());
  } catch (const DomainError& e) {
    return fail(2, "domain", e.what());
  } catch (const std::exception& e) {
    return fail(1, "numerical", e.what());
  }
  return fail(2, "argument", "no subcommand");
}
