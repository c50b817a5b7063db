#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <string>

#include "urbanik/density.hpp"
#include "urbanik/errors.hpp"
#include "urbanik/report_io.hpp"

using nlohmann::json;
using urbanik::Format;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

// Objects dump with sorted keys, so sorted output survives a round trip.
bool keys_sorted(const std::string& text) { return json::parse(text).dump(2) + "\n" == text; }

urbanik::Report sample_report() {
  urbanik::Report r;
  r.check_name = "moment";
  r.inputs = {{"c", 1.5}, {"n", 3.0}};
  r.observed = {14.69693845669907};
  r.expected = {14.696938456699067};
  r.max_abs_dev = 3.5e-15;
  r.tolerance = 1.4e-5;
  r.runtime_ms = 12;
  r.decide();
  return r;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(urbanik::format_number(0.1) == "0.1");
  CHECK(urbanik::format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(urbanik::format_number(-2.5e-300) == "-2.5e-300");
  CHECK(urbanik::format_number(NAN) == "nan");
  CHECK(urbanik::format_number(INFINITY) == "inf");
  CHECK(urbanik::format_number(-INFINITY) == "-inf");
  CHECK(urbanik::round15(1.0 / 3.0) == 0.333333333333333);
  CHECK(urbanik::round15(urbanik::round15(M_PI)) == urbanik::round15(M_PI));
  CHECK(std::isnan(urbanik::round15(NAN)));
}

TEST_CASE("format names") {
  CHECK(urbanik::parse_format("csv") == Format::Csv);
  CHECK(urbanik::parse_format("json") == Format::Json);
  CHECK_THROWS_AS(urbanik::parse_format("xml"), urbanik::DomainError);
}

TEST_CASE("CSV starts with the schema line") {
  const std::vector<urbanik::DensityEval> rows{urbanik::density(1.0, 2.0)};
  const std::string csv = urbanik::write_density(rows, Format::Csv);
  CHECK(first_line(csv) == "# urbanik-sf v1");
  CHECK(csv.find("c,t,value,log_value,abs_err,rel_err,method\n") != std::string::npos);
  CHECK(first_line(urbanik::write_reports({sample_report()}, Format::Csv)) == "# urbanik-sf v1");
  CHECK(first_line(urbanik::write_error(2, "argument", "bad", Format::Csv)) == "# urbanik-sf v1");
}

TEST_CASE("JSON carries schema 1 and sorted keys") {
  const std::vector<urbanik::DensityEval> rows{urbanik::density(1.0, 2.0),
                                               urbanik::density(0.5, 1e4)};
  const std::string text = urbanik::write_density(rows, Format::Json);
  const json doc = json::parse(text);
  CHECK(doc["schema"] == 1);
  CHECK(doc["kind"] == "density");
  CHECK(doc["records"].size() == 2);
  CHECK(doc["records"][0]["value"].get<double>() == urbanik::round15(rows[0].value));
  CHECK(doc["records"][1]["method"] == "Shifted");
  CHECK(keys_sorted(text));
  CHECK(keys_sorted(urbanik::write_reports({sample_report()}, Format::Json)));
}

TEST_CASE("report output") {
  const std::string csv = urbanik::write_reports({sample_report()}, Format::Csv);
  CHECK(csv.find("moment,c=1.5;n=3,") != std::string::npos);
  CHECK(csv.find(",true\n") != std::string::npos);
  CHECK(csv.find("runtime_ms") == std::string::npos);
  CHECK(urbanik::write_reports({sample_report()}, Format::Csv, true).find("runtime_ms") !=
        std::string::npos);
  const json doc = json::parse(urbanik::write_reports({sample_report()}, Format::Json));
  CHECK(doc["records"][0]["pass"] == true);
  CHECK(doc["records"][0]["inputs"][1]["name"] == "n");
  CHECK_FALSE(doc["records"][0].contains("runtime_ms"));
}

TEST_CASE("non-finite numbers are spelled out") {
  urbanik::DensityEval e;
  e.c = 1.0;
  e.t = 1.0;
  e.log_value = -INFINITY;
  e.rel_err = INFINITY;
  const json doc = json::parse(urbanik::write_density({e}, Format::Json));
  CHECK(doc["records"][0]["log_value"] == "-inf");
  CHECK(doc["records"][0]["rel_err"] == "inf");
  CHECK(urbanik::write_density({e}, Format::Csv).find(",-inf,") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  std::vector<urbanik::DensityEval> rows;
  for (double t : {0.5, 2.0, 30.0}) rows.push_back(urbanik::density(1.5, t));
  std::vector<urbanik::DensityEval> again;
  for (double t : {0.5, 2.0, 30.0}) again.push_back(urbanik::density(1.5, t));
  CHECK(urbanik::write_density(rows, Format::Csv) == urbanik::write_density(again, Format::Csv));
  CHECK(urbanik::write_density(rows, Format::Json) == urbanik::write_density(again, Format::Json));
}

TEST_CASE("error record") {
  const json doc = json::parse(urbanik::write_error(2, "domain", "t must be > 0", Format::Json));
  CHECK(doc["schema"] == 1);
  CHECK(doc["kind"] == "error");
  CHECK(doc["error"]["exit_code"] == 2);
  CHECK(doc["error"]["type"] == "domain");
  CHECK(doc["error"]["message"] == "t must be > 0");
  const std::string csv = urbanik::write_error(1, "numerical", "say \"hi\", ok", Format::Csv);
  CHECK(csv.find("numerical,1,\"say \"\"hi\"\", ok\"\n") != std::string::npos);
}

TEST_CASE("Krein and asymptotic tables") {
  urbanik::KreinTrace k;
  k.c = 3.0;
  k.truncations = {1e2, 1e3, 1e4};
  k.partial_integrals = {-1.0, -2.0, -2.5};
  k.classification = urbanik::KreinClass::Convergent;
  const std::string csv = urbanik::write_krein({k}, Format::Csv);
  CHECK(csv.find("3,10000,-2.5,CONVERGENT,") != std::string::npos);
  CHECK(json::parse(urbanik::write_krein({k}, Format::Json))["kind"] == "krein");

  const auto rows = urbanik::asympt_ratio_rows(1.0, {10.0, 100.0}, urbanik::AsymptMode::Large);
  const std::vector<urbanik::AsymptTable> tabs{{1.0, urbanik::AsymptMode::Large, rows},
                                               {1.0, urbanik::AsymptMode::Large, rows}};
  const json a = json::parse(urbanik::write_asympt(tabs, Format::Json));
  CHECK(a["records"].size() == 4);
  CHECK(a["records"][0]["mode"] == "large");
}
