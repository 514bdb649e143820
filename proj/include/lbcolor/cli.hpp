#pragma once

#include <iosfwd>

namespace lbcolor {

/// Entry point of the lbcolor command line tool, with injectable streams.
/// Exit codes: 0 feasible / valid, 1 infeasible / invalid, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lbcolor
