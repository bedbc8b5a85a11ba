#pragma once

#include <iosfwd>

#include "command.hpp"

namespace sfill::cli {

// Exit codes: 0 success, 1 invalid input, 2 time limit hit, 3 internal
// disagreement or invariant violation.
enum ExitCode { Success = 0, InvalidInput = 1, Timeout = 2, Internal = 3 };

// Time limit when --max-seconds is absent: $SFILL_MAX_SECONDS, else 60.
double default_max_seconds();

int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sfill::cli
