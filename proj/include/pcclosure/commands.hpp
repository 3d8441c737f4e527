#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcc {

/// Runs one CLI invocation (args exclude the program name). Results go to
/// out, diagnostics to err. Returns the process exit code: 0 for
/// ok/member/equal verdicts, 1 for outside/not-equal/failed-demo, 2 for
/// parse or validation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pcc
