#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace milnor::cli {

/// Exit codes: 0 success, 1 suite reported failures, 2 input or parse
/// error, 3 mathematical precondition violated.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace milnor::cli
