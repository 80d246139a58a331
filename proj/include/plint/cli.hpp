#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plint {

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; errors go to `err`. Returns 0 on success,
/// 1 on domain errors (reported as JSON) and 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plint
