#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace holocolor::cli {

inline constexpr const char* kToolName = "holocolor";
inline constexpr const char* kVersion = "0.1.0";

enum ExitStatus : int { kOk = 0, kDomainFailure = 1, kUsageFailure = 2 };

/// Runs one command line (program name excluded) and writes its report to
/// `out`: a JSON document, or DOT text for gem exports.
int dispatch(const std::vector<std::string>& args, std::ostream& out);

}  // namespace holocolor::cli
