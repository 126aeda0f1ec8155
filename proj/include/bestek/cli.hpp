#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bestek {

/// Command-line entry point. `args` excludes the program name. The JSON report
/// goes to `out`, human-readable summaries and diagnostics to `err`.
/// Returns 0 on success, 1 when a verification fails, 2 on input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bestek
