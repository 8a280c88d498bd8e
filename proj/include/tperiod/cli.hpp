#ifndef TPERIOD_CLI_HPP
#define TPERIOD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "tperiod/engine.hpp"

namespace tperiod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

// Structured analyze output; keys are fixed for every spec.
nlohmann::ordered_json report_json(const PeriodReport& report);

void write_report_text(std::ostream& os, const PeriodReport& report);

/// Dispatches "analyze", "walksets", "contract" and "sweep". `args` excludes
/// the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tperiod::cli

#endif  // TPERIOD_CLI_HPP
