#pragma once

#include <ostream>

namespace syntomic {

/// Exit codes: 0 success, 1 usage error, 2 validation mismatch or failed check.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace syntomic
