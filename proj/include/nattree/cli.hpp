#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nattree {

/// Exit codes: 0 success, 1 a check or validation failed, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nattree
