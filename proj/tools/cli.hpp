#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grosslat::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grosslat::cli
