#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "goishi/core.hpp"

namespace goishi::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;

enum class TableFormat { Csv, Markdown };

/// Rows are x, columns y. The CSV header row/column is optional; markdown
/// always carries the index labels.
std::string render_table(const ValueTable& table, TableFormat format, bool header = false);

/// Runs the command line `args` (without the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goishi::cli
