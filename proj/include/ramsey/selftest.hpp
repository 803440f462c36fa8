#pragma once

#include <ostream>

namespace ramsey {

struct SelftestReport {
    int checks = 0;
    int failures = 0;

    bool ok() const noexcept { return failures == 0; }
};

// Cross-checks the kernels against the brute-force reference on small
// exhaustive families. Progress and failures go to log.
SelftestReport run_selftest(std::ostream& log);

} // namespace ramsey
