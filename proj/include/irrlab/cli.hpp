#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irrlab {

// Subcommands: compute, gen, enum, verify, extremal, example, replay, shrink.
// args excludes the program name. Exit status: 0 success (verify: no FAILS),
// 1 verify or replay found FAILS, 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace irrlab
