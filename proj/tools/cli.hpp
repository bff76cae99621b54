#pragma once

#include <iosfwd>

namespace latcurve::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 construction or search
/// failure (a JSON error record goes to `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latcurve::cli
