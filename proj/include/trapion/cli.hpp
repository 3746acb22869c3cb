#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trapion::cli {

// args excludes the program name. Returns 0 on success, 2 on input errors
// (bad flags, malformed files), 1 on runtime failures.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trapion::cli
