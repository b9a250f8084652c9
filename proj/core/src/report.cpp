#include "gplab/report.hpp"

#include <chrono>
#include <ctime>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace gplab {

namespace {

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::ordered_json record_json(const VerificationRecord& r) {
  return {
      {"k", r.k},
      {"a", r.a},
      {"b", r.b},
      {"f_k", r.fk},
      {"z1", r.z1},
      {"z2", r.z2},
      {"mode", to_string(r.mode)},
      {"convention", to_string(r.convention)},
      {"lo", r.lo},
      {"hi", r.hi},
      {"count", r.count},
      {"needed_2x", r.needed_2x},
      {"pass", r.pass},
      {"error", r.error},
  };
}

void record_csv(std::ostream& out, const VerificationRecord& r) {
  out << r.k << ',' << r.a << ',' << r.b << ',' << r.fk << ',' << r.z1 << ','
      << r.z2 << ',' << to_string(r.mode) << ',' << to_string(r.convention)
      << ',' << r.lo << ',' << r.hi << ',' << r.count << ',' << r.needed_2x
      << ',' << (r.pass ? "true" : "false") << ',' << r.error << '\n';
}

}  // namespace

OutputFormat format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format: " + s);
}

void write_report(std::ostream& out, const SweepReport& report,
                  const ReportOptions& opts) {
  const std::uint64_t elapsed = opts.deterministic ? 0 : report.elapsed_ms;
  if (opts.format == OutputFormat::Csv) {
    if (!opts.deterministic)
      out << "# generated " << timestamp_utc() << " elapsed_ms=" << elapsed << '\n';
    out << "k,a,b,f_k,z1,z2,mode,convention,lo,hi,count,needed_2x,pass,error\n";
    for (const VerificationRecord& r : report.records) record_csv(out, r);
    return;
  }

  nlohmann::ordered_json doc;
  if (!opts.deterministic) doc["meta"] = {{"generated", timestamp_utc()}};
  doc["records"] = nlohmann::ordered_json::array();
  for (const VerificationRecord& r : report.records)
    doc["records"].push_back(record_json(r));
  doc["summary"] = {
      {"instances", report.instances},
      {"failures", report.failures},
      {"errors", report.errors},
      {"elapsed_ms", elapsed},
  };
  out << doc.dump(2) << '\n';
}

void write_bias_rows(std::ostream& out, const std::vector<BiasRow>& rows,
                     OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "x,pi1,pi3,delta\n";
    for (const BiasRow& r : rows)
      out << r.x << ',' << r.pi1 << ',' << r.pi3 << ',' << r.delta << '\n';
    return;
  }
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const BiasRow& r : rows)
    doc["rows"].push_back({{"x", r.x}, {"pi1", r.pi1}, {"pi3", r.pi3}, {"delta", r.delta}});
  out << doc.dump(2) << '\n';
}

}  // namespace gplab
