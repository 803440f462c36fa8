#pragma once

#include <ostream>

namespace ramsey::cli {

// Exit codes: 0 success, 1 domain or usage error, 2 resource or budget exhaustion.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ramsey::cli
