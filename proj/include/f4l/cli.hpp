#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace f4l {

/// Entry point of the command-line tool. Returns 0 on success, 1 on usage
/// errors, 2 when `verify` finds a hard check failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f4l
