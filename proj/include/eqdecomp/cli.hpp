#pragma once

// Command dispatch for the eqdecomp tool.

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace eqdecomp {

using Report = nlohmann::ordered_json;

/// Exit codes: 0 all verdicts pass, 1 an identity failed, 2 usage or input error.
enum ExitCode : int { kPass = 0, kIdentityFailure = 1, kUsageError = 2 };

/// `args` includes the program name. Writes the report to `out` and
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text rendering of a report; carries the same values as its JSON form.
std::string render_text(const Report& report);

}  // namespace eqdecomp
