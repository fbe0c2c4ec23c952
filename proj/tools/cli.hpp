#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fourier/verification.hpp"

namespace fourier::cli {

/// Exit codes: 0 success, 1 a verification check failed, 2 usage or config error.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"schema": 1, "reports": [...]} as text, terminated by a newline.
std::string reports_to_json(const std::vector<LemmaReport>& reports);

/// 17 significant digits, locale independent ("inf"/"nan" for non-finite).
std::string format_double(double v);

}  // namespace fourier::cli
