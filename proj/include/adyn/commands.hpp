#ifndef ADYN_COMMANDS_HPP
#define ADYN_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace adyn::cli {

/// Runs one CLI invocation.  Exit status: 0 success, 1 domain error,
/// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adyn::cli

#endif
