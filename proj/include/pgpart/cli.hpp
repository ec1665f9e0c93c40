#pragma once

#include <iosfwd>

namespace pgpart {

/// Exit codes: 0 success, 1 a partition failed verification (or an
/// acceptance criterion failed), 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgpart
