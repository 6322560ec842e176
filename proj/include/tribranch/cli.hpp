#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tribranch {

/// Runs one batch command. `args` excludes the program name. Returns 0 on
/// success (or an Essential verdict), 1 on a domain failure and 2 on I/O or
/// schema errors. Reports go to `out` unless --report names a file; the
/// one-line human summary goes to `err` unless --quiet.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tribranch
