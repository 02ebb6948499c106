#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mislab::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a domain failure (including a failed validation or verification),
/// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mislab::cli
