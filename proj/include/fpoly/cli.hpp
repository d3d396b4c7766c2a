#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fpoly {

// Runs one CLI invocation. Exit codes: 0 success/verified, 1 mathematical
// failure (an identity or dimension check did not hold), 2 usage, schema or
// I/O error. All randomness is derived from the --seed flag; identical
// arguments give byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpoly
