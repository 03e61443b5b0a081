#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dualcx {

/**
 * Entry point of the `dualcx` tool. `args` excludes the program name.
 * Returns the process exit code: 0 success, 1 usage or parse error,
 * 2 property (R) failure, 3 internal invariant violation.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualcx
