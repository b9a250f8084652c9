#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gplab/report.hpp"

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

TEST_CASE("csv and json carry identical records") {
  gplab::SweepConfig cfg;
  cfg.k_lo = 2;
  cfg.k_hi = 4;
  cfg.generator_bound = 3;
  const gplab::SieveTable t =
      gplab::SieveTable::build(gplab::required_sieve_limit(cfg));
  const gplab::SweepReport report = gplab::sweep(cfg, t);
  REQUIRE(!report.records.empty());

  gplab::ReportOptions opts;
  opts.deterministic = true;

  std::ostringstream csv_out;
  opts.format = gplab::OutputFormat::Csv;
  gplab::write_report(csv_out, report, opts);

  std::ostringstream json_out;
  opts.format = gplab::OutputFormat::Json;
  gplab::write_report(json_out, report, opts);

  std::istringstream csv(csv_out.str());
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "k,a,b,f_k,z1,z2,mode,convention,lo,hi,count,needed_2x,pass,error");

  const auto doc = nlohmann::json::parse(json_out.str());
  REQUIRE(doc.at("records").size() == report.records.size());
  CHECK(doc.at("summary").at("instances") == report.instances);
  CHECK(doc.at("summary").at("failures") == report.failures);
  CHECK(doc.at("summary").at("elapsed_ms") == 0);

  std::size_t i = 0;
  for (std::string line; std::getline(csv, line); ++i) {
    const auto fields = split_csv_line(line);
    REQUIRE(fields.size() == 14);
    const auto& rec = doc.at("records").at(i);
    CHECK(std::stoull(fields[0]) == rec.at("k").get<std::uint64_t>());
    CHECK(std::stoll(fields[1]) == rec.at("a").get<std::int64_t>());
    CHECK(std::stoll(fields[2]) == rec.at("b").get<std::int64_t>());
    CHECK(std::stoull(fields[3]) == rec.at("f_k").get<std::uint64_t>());
    CHECK(std::stoll(fields[4]) == rec.at("z1").get<std::int64_t>());
    CHECK(std::stoll(fields[5]) == rec.at("z2").get<std::int64_t>());
    CHECK(fields[6] == rec.at("mode").get<std::string>());
    CHECK(fields[7] == rec.at("convention").get<std::string>());
    CHECK(std::stoll(fields[8]) == rec.at("lo").get<std::int64_t>());
    CHECK(std::stoll(fields[9]) == rec.at("hi").get<std::int64_t>());
    CHECK(std::stoull(fields[10]) == rec.at("count").get<std::uint64_t>());
    CHECK(std::stoull(fields[11]) == rec.at("needed_2x").get<std::uint64_t>());
    CHECK(fields[12] == (rec.at("pass").get<bool>() ? "true" : "false"));
    CHECK(fields[13] == rec.at("error").get<std::string>());
  }
  CHECK(i == report.records.size());
}

TEST_CASE("bias rows serialize in both formats") {
  const gplab::SieveTable t = gplab::SieveTable::build(200);
  const auto rows = gplab::bias_report(t, {100});

  std::ostringstream csv;
  gplab::write_bias_rows(csv, rows, gplab::OutputFormat::Csv);
  CHECK(csv.str() == "x,pi1,pi3,delta\n100,11,13,2\n");

  std::ostringstream json;
  gplab::write_bias_rows(json, rows, gplab::OutputFormat::Json);
  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc.at("rows").at(0).at("pi1") == 11);
  CHECK(doc.at("rows").at(0).at("pi3") == 13);
  CHECK(doc.at("rows").at(0).at("delta") == 2);
}
