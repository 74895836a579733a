#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "skillcoach/engine.hpp"

namespace skillcoach::report_io {

/// Fixed columnar formats. Line 1 carries the run reference, line 2 the
/// header, '.' decimal separator throughout. Means and stds use 4
/// significant digits, success rates one decimal of percent.
void write_summary_csv(std::ostream& out, const std::vector<engine::SummaryRow>& rows,
                       const std::string& run_ref);
void write_raw_csv(std::ostream& out, const std::vector<engine::RawRecord>& rows,
                   const std::string& run_ref);
void write_significance_csv(std::ostream& out, const std::vector<engine::SignificanceRow>& rows,
                            const std::string& run_ref);

std::string summary_csv(const std::vector<engine::SummaryRow>& rows, const std::string& run_ref);
std::string raw_csv(const std::vector<engine::RawRecord>& rows, const std::string& run_ref);
std::string significance_csv(const std::vector<engine::SignificanceRow>& rows,
                             const std::string& run_ref);

/// Reads back a raw-records file; throws ValidationError on truncated or
/// malformed rows.
std::vector<engine::RawRecord> read_raw_csv(std::istream& in);
std::vector<engine::RawRecord> load_raw_csv(const std::filesystem::path& path);

std::string fmt_sig4(double v);
std::string fmt_pct1(double fraction);

}  // namespace skillcoach::report_io
