#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbicurve::cli {

/// Runs one command line against the library; results go to out, diagnostics
/// to err. Returns the process exit code: 0 success, 2 domain error,
/// 3 resource cap hit, 64 usage.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace orbicurve::cli
