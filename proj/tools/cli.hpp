#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lambdamap::cli {

// Runs one command. `args` excludes the program name. Returns 0 on success,
// 1 on a semantic error (bad term, malformed map) and 2 on a usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lambdamap::cli
