#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stoim::cli {

/// Runs one subcommand against the given streams. Returns 0 on success,
/// 1 on a domain failure (invalid matching or sequence), 2 on a usage
/// error.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace stoim::cli
