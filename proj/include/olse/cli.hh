/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef OLSE_GUARD_CLI_HH
#define OLSE_GUARD_CLI_HH 1

#include <iosfwd>

namespace olse::cli
{
    enum ExitCode : int
    {
        exit_yes = 0,
        exit_no = 1,
        exit_usage = 2,
        exit_internal = 3
    };

    /// Runs one olse invocation: subcommands solve, generate, reduce and
    /// validate. Writes one JSON document to `out`, diagnostics to `err`, and
    /// returns the process exit status.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
