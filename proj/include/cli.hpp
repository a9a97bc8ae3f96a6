#pragma once

#include <string>
#include <vector>

/**
 * Command-line front end.
 *
 * Subcommands: arrange, paths, cone, psi, quiver, potential, polytope,
 * oracle, verify.  Global flags: --n (rank), --json, --seed.  Exit codes:
 * 0 on success, 1 when a verification check fails, 2 on usage errors.
 */
namespace cli {

/** Parse and execute; returns the process exit code. */
int run(int argc, const char* const* argv);

/** Convenience overload for tests: run({"cone", "1,2,1"}). */
int run(const std::vector<std::string>& args);

}  // namespace cli
