#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace equicount::cli {

// One batch invocation: args is argv without the program name. The result
// (or a machine-readable {code, message, path} error object) is written to
// out. Returns the process exit status: 0 success, 1 compute error,
// 2 validation error. Output is deterministic for identical inputs.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace equicount::cli
