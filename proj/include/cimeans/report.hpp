#pragma once

#include <string>
#include <vector>

#include "cimeans/harness.hpp"

namespace cimeans {

/// Number formatting for CSV cells and the JSON-adjacent text outputs.
std::string format_number(double v);

/// One row per report under the fixed column header; rows are emitted in the
/// order given, which sweep() already sorts by case key.
std::string reports_to_csv(const std::vector<InequalityReport>& reports);

/// Aggregate document: overall counts plus one object per theorem seen.
std::string summary_to_json(const SweepResult& result);

/// Where a report file lands: an explicit directory flag wins, then the
/// CIMEANS_OUTPUT_DIR environment variable, then the working directory.
/// Absolute filenames pass through untouched.
std::string resolve_output_path(const std::string& filename, const std::string& dir_flag = "");

void write_text_file(const std::string& path, const std::string& text);

} // namespace cimeans
