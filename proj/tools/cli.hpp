#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace affgr::cli {

/// Exit codes: 0 success or verified, 2 inconclusive, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affgr::cli
