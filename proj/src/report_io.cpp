#include "urbanik/report_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "urbanik/errors.hpp"

namespace urbanik {
namespace {

using nlohmann::json;

json num(double x) {
  if (!std::isfinite(x)) return format_number(x);
  return round15(x);
}

json nums(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(num(x));
  return a;
}

std::string envelope(const char* kind, json records) {
  json doc;
  doc["schema"] = kJsonSchema;
  doc["kind"] = kind;
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

std::string joined(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ';';
    s += format_number(xs[k]);
  }
  return s;
}

// Cells never contain commas except free text, which is quoted.
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json density_json(const DensityEval& e) {
  return {{"c", num(e.c)},
          {"t", num(e.t)},
          {"value", num(e.value)},
          {"log_value", num(e.log_value)},
          {"abs_err", num(e.abs_err_estimate)},
          {"rel_err", num(e.rel_err)},
          {"method", std::string(method_name(e.method))}};
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw DomainError("unknown format '" + name + "' (expected csv or json)");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

std::string write_density(const std::vector<DensityEval>& rows, Format f) {
  if (f == Format::Json) {
    json a = json::array();
    for (const auto& e : rows) a.push_back(density_json(e));
    return envelope("density", std::move(a));
  }
  std::ostringstream out;
  out << kCsvSchemaLine << "\n"
      << "c,t,value,log_value,abs_err,rel_err,method\n";
  for (const auto& e : rows) {
    out << format_number(e.c) << ',' << format_number(e.t) << ',' << format_number(e.value) << ','
        << format_number(e.log_value) << ',' << format_number(e.abs_err_estimate) << ','
        << format_number(e.rel_err) << ',' << method_name(e.method) << "\n";
  }
  return out.str();
}

std::string write_reports(const std::vector<Report>& reports, Format f, bool timings) {
  if (f == Format::Json) {
    json a = json::array();
    for (const auto& r : reports) {
      // Parameter order matters (t0, t1, ...), so inputs stay a list.
      json inputs = json::array();
      for (const auto& [k, v] : r.inputs) inputs.push_back({{"name", k}, {"value", num(v)}});
      json o = {{"check", r.check_name},
                {"inputs", std::move(inputs)},
                {"observed", nums(r.observed)},
                {"expected", nums(r.expected)},
                {"max_abs_dev", num(r.max_abs_dev)},
                {"tolerance", num(r.tolerance)},
                {"pass", r.pass}};
      if (!r.expected_law.empty()) o["expected_law"] = r.expected_law;
      if (timings) o["runtime_ms"] = r.runtime_ms;
      a.push_back(std::move(o));
    }
    return envelope("report", std::move(a));
  }
  std::ostringstream out;
  out << kCsvSchemaLine << "\n"
      << "check,params,observed,expected,dev,tol,pass" << (timings ? ",runtime_ms" : "") << "\n";
  for (const auto& r : reports) {
    std::string params;
    for (std::size_t k = 0; k < r.inputs.size(); ++k) {
      if (k) params += ';';
      params += r.inputs[k].first + "=" + format_number(r.inputs[k].second);
    }
    out << r.check_name << ',' << params << ',' << joined(r.observed) << ','
        << (r.expected.empty() ? quoted(r.expected_law) : joined(r.expected)) << ','
        << format_number(r.max_abs_dev) << ',' << format_number(r.tolerance) << ','
        << (r.pass ? "true" : "false");
    if (timings) out << ',' << r.runtime_ms;
    out << "\n";
  }
  return out.str();
}

std::string write_krein(const std::vector<KreinTrace>& traces, Format f) {
  if (f == Format::Json) {
    json a = json::array();
    for (const auto& k : traces) {
      a.push_back({{"c", num(k.c)},
                   {"truncations", nums(k.truncations)},
                   {"partial_integrals", nums(k.partial_integrals)},
                   {"classification", krein_class_name(k.classification)},
                   {"tail_exponent", num(k.tail_exponent)},
                   {"predicted_tail_exponent", num(k.predicted_tail_exponent)}});
    }
    return envelope("krein", std::move(a));
  }
  std::ostringstream out;
  out << kCsvSchemaLine << "\n"
      << "c,T,partial_integral,classification,tail_exponent,predicted_tail_exponent\n";
  for (const auto& k : traces) {
    for (std::size_t j = 0; j < k.truncations.size(); ++j) {
      out << format_number(k.c) << ',' << format_number(k.truncations[j]) << ','
          << format_number(k.partial_integrals[j]) << ',' << krein_class_name(k.classification)
          << ',' << format_number(k.tail_exponent) << ','
          << format_number(k.predicted_tail_exponent) << "\n";
    }
  }
  return out.str();
}

std::string write_asympt(const std::vector<AsymptTable>& tables, Format f) {
  auto mode_name = [](AsymptMode m) { return m == AsymptMode::Large ? "large" : "small"; };
  if (f == Format::Json) {
    json a = json::array();
    for (const auto& tab : tables) {
      for (const auto& r : tab.rows) {
        a.push_back({{"c", num(tab.c)},
                     {"mode", mode_name(tab.mode)},
                     {"t", num(r.t)},
                     {"density", density_json(r.density)},
                     {"asymptotic", density_json(r.asymptotic)},
                     {"ratio", num(r.ratio)},
                     {"scaled_residual", num(r.scaled_residual)}});
      }
    }
    return envelope("asympt", std::move(a));
  }
  std::ostringstream out;
  out << kCsvSchemaLine << "\n"
      << "c,mode,t,density,log_density,abs_err,method,asymptotic,log_asymptotic,ratio,"
         "scaled_residual\n";
  for (const auto& tab : tables) {
    for (const auto& r : tab.rows) {
      out << format_number(tab.c) << ',' << mode_name(tab.mode) << ',' << format_number(r.t)
          << ',' << format_number(r.density.value) << ',' << format_number(r.density.log_value)
          << ',' << format_number(r.density.abs_err_estimate) << ','
          << method_name(r.density.method) << ',' << format_number(r.asymptotic.value) << ','
          << format_number(r.asymptotic.log_value) << ',' << format_number(r.ratio) << ','
          << format_number(r.scaled_residual) << "\n";
    }
  }
  return out.str();
}

std::string write_error(int exit_code, const std::string& kind, const std::string& message,
                        Format f) {
  if (f == Format::Json) {
    json doc = {{"schema", kJsonSchema},
                {"kind", "error"},
                {"error", {{"exit_code", exit_code}, {"type", kind}, {"message", message}}}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << kCsvSchemaLine << "\n"
      << "error,exit_code,message\n"
      << kind << ',' << exit_code << ',' << quoted(message) << "\n";
  return out.str();
}

}  // namespace urbanik
