#pragma once

#include <string>

#include "wzlab/scan.hpp"

namespace wzlab {

struct ReportFormatOptions {
  bool include_timing = false;  // per-verdict microseconds; makes output run-dependent
  bool list_verdicts = false;   // human format: every verdict, not only failures
};

/// JSON report (schema documented in docs/report-schema.md).
std::string report_json(const Report& report, const ReportFormatOptions& options = {});
/// One verdict per row.
std::string report_csv(const Report& report, const ReportFormatOptions& options = {});
/// Per-claim pass/fail table followed by any failures.
std::string report_human(const Report& report, const ReportFormatOptions& options = {});

}  // namespace wzlab
