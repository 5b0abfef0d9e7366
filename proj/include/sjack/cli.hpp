#pragma once

#include <iosfwd>

#include "sjack/constants.hpp"

namespace sjack {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFinding = 1, kExitUsage = 2 };

/// Entry point of the `shifted-jack` command line; writes normal output to
/// `out` and diagnostics to `err`.
/// Exit status of a finished sweep: a finding whenever any failure was recorded.
int verify_exit_code(const VerifyResult& result);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sjack
