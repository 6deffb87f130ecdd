#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permstat::cli {

/// Runs one invocation; `args` excludes the program name.
/// Exit status: 0 success or passing check, 1 failing check, 2 usage or validation error,
/// 3 internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permstat::cli
