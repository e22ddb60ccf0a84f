#pragma once

#include <string>
#include <vector>

namespace fpure::cli {

// Exit codes: 0 finished (Inconclusive included), 1 usage, parse or domain
// error, 2 resource cap or exponent overflow, 3 a --verify-witness recheck
// disagreed with the reported result.
struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

// args excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace fpure::cli
