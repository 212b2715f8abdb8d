#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibcalc::cli {

// Dispatches one command line (without the program name). Data goes to
// `out`, diagnostics to `err`. Returns 0 on success, 2 on usage errors,
// 1 on domain errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fibcalc::cli
