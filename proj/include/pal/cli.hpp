#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pal {

// Driver behind the `pal` binary; tests call it directly. `args` excludes
// the program name. Returns the exit code: 0 success, 1 property failure,
// 2 usage or catalog error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pal
