#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spaceform {

// Runs the command-line driver on the given argument list (no program name)
// and returns the process exit status: 0 success, 1 validation/usage error,
// 2 precision exhaustion, 3 search exhaustion.  All regular output goes to
// `out`, diagnostics to `err`.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace spaceform
