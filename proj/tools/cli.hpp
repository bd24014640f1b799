#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sjt::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitValidation = 66;
inline constexpr int kExitResource = 70;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportFormat = "sjt-report/1";

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sjt::cli
