#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relweyl {

// Command-line front end. `args` excludes the program name. Exit codes:
//   0 success / all checks passed
//   1 verification failure or computational error
//   2 usage error (bad flags, malformed J or primes)
//   3 unsupported Cartan type
//   4 output file cannot be written
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relweyl
