#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace refosc {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 IO error.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace refosc
