#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fmckit::cli {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitObstruction = 3;

// args excludes the program name.  One JSON document is written to out;
// diagnostics go to err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fmckit::cli
