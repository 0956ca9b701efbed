#pragma once

namespace switchtrack {

// Entry point of the command-line tool, callable in-process by tests.
// Subcommands: project, bounds, simulate, equivalence.
// Exit codes: 0 success, 1 property breach, 2 validation error, 3 numeric
// failure.
int cli_main(int argc, const char* const* argv);

}  // namespace switchtrack
