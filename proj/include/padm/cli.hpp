#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padm {

// Entry point shared by the binary and the in-process tests.
// Exit codes: 0 pass, 1 verdict failure, 2 input error, 3 internal
// verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padm
