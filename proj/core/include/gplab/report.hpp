#pragma once

#include <iosfwd>
#include <string>

#include "gplab/verifier.hpp"

namespace gplab {

enum class OutputFormat { Csv, Json };

OutputFormat format_from_string(const std::string& s);

struct ReportOptions {
  OutputFormat format = OutputFormat::Csv;
  /// Suppresses the timestamp metadata header and zeroes elapsed time so
  /// repeated runs are byte-identical.
  bool deterministic = false;
};

void write_report(std::ostream& out, const SweepReport& report,
                  const ReportOptions& opts);

void write_bias_rows(std::ostream& out, const std::vector<BiasRow>& rows,
                     OutputFormat format);

}  // namespace gplab
