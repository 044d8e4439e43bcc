#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bubblelab::cli {

/// Entry point behind the bubblelab binary. `args` excludes the program
/// name. Reports go to `out`; errors are printed to `err` as single-line
/// JSON. Returns 0 on success, 1 on a failed verification, 2 on usage or
/// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bubblelab::cli
