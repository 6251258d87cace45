#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wallcross::cli {

enum ExitCode : int {
    ok = 0,
    parse_error = 1,
    configuration_error = 2,
    selftest_failed = 3,
};

// argv[0] is the program name, as in main().
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

// Worked examples checked by `selftest`; returns the number of failures.
int selftest(std::ostream& out);

} // namespace wallcross::cli
