#pragma once

#include <string>
#include <vector>

namespace coxy::cli {

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command; `args` excludes the program name.
Result run(const std::vector<std::string>& args);

} // namespace coxy::cli
