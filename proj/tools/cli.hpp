#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ramified::cli {

/// Runs one subcommand. args excludes the program name. Returns 0 on
/// success, 1 on domain errors (error JSON on err), 2 on usage errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ramified::cli
