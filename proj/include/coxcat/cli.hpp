#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxcat::cli {

// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxcat::cli
