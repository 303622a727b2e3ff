#pragma once

#include <ostream>

namespace kautz::cli {

/// Exit codes of the kautz tool.
enum Exit : int { ok = 0, validation = 1, budget = 2, diff = 3 };

/// Runs the command line; reports go to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kautz::cli
