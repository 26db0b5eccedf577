#pragma once

#include <ostream>

#include "liftwing/error.hpp"

namespace liftwing {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitInfeasible = 3,
    kExitIo = 4,
};

/// Process exit code for a failure of the given kind.
int exit_code_for(ErrorKind kind) noexcept;

/// Entry point of the `liftwing` tool. Never throws; failures are reported on `err`
/// as `error[<kind>]: <message>` and mapped to an exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace liftwing
