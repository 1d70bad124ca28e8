#pragma once

namespace klein {

// Entry point of the command line tool, callable in process by tests.
// Returns the process exit code: 0 on success, 1 when checks or
// constructions fail, 2 on malformed invocations.
int cli_main(int argc, const char* const* argv);

}  // namespace klein
