#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prga::cli {

// Exit codes: 0 success, 1 domain or usage error, 2 I/O error.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prga::cli
