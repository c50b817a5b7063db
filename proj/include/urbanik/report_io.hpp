#pragma once

// Deterministic CSV / JSON serialization of density values, reports, Krein
// traces and asymptotic ratio tables.  Numbers are rounded to 15 significant
// digits; JSON objects have sorted keys; CSV output starts with the schema
// line `# urbanik-sf v1`.

#include <string>
#include <vector>

#include "urbanik/diagnostics.hpp"

namespace urbanik {

enum class Format { Csv, Json };

inline constexpr const char* kCsvSchemaLine = "# urbanik-sf v1";
inline constexpr int kJsonSchema = 1;

/// Throws DomainError for anything but "csv" or "json".
Format parse_format(const std::string& name);

/// %.15g, with nan / inf / -inf spelled out.
std::string format_number(double x);

/// `x` rounded to 15 significant digits (non-finite values unchanged).
double round15(double x);

std::string write_density(const std::vector<DensityEval>& rows, Format f);
/// runtime_ms is written only when `timings` is set, so that repeated runs
/// produce identical bytes by default.
std::string write_reports(const std::vector<Report>& reports, Format f, bool timings = false);
std::string write_krein(const std::vector<KreinTrace>& traces, Format f);
struct AsymptTable {
  double c;
  AsymptMode mode;
  std::vector<AsymptRow> rows;
};

std::string write_asympt(const std::vector<AsymptTable>& tables, Format f);

/// Machine-readable error record; `kind` is e.g. "argument" or "domain".
std::string write_error(int exit_code, const std::string& kind, const std::string& message,
                        Format f);

}  // namespace urbanik
