#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vat {

// Full command-line surface, separated from main() so tests can drive it.
// Exit codes: 0 success, 1 failed check, 2 usage error, 3 budget exhausted.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vat
