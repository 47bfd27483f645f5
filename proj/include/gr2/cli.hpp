#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gr2::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace gr2::cli
