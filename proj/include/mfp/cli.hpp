#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mfp {

// Command dispatch; argv without the program name. Exit codes: 0 success
// (equiv/is-baxter: 0 yes, 1 no), 2 invalid input, 3 invalid code, 64 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mfp
