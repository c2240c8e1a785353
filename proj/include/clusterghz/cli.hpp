#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterghz {

/// Runs the command-line tool in-process. `args` excludes the program name.
/// Exit status: 0 success, 1 verification or golden-comparison failure,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace clusterghz
