#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddt::cli {

/// Run the ddt command line. Returns 0 on success, 1 on validation errors,
/// 2 on usage errors. The report is printed to `out` as JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddt::cli
