#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bts::cli {

/// Runs one command; `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error, 2 parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bts::cli
