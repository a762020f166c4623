#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pals {

constexpr const char* kToolVersion = "0.1.0";

// Full command-line surface (verbs: gen, lcs, scs, pals, pals-star,
// transform, refine, eval, bench). Returns the process exit status; all
// output goes through the supplied streams so tests can run it in-process.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pals
