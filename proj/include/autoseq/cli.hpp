#pragma once

#include <iosfwd>

namespace autoseq::cli {

// Runs one CLI invocation. Exit codes: 0 success (equal / positive
// classification), 1 counterexample or absence, 2 malformed input or usage.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace autoseq::cli
