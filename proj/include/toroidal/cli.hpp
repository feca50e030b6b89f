#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toroidal::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;

/**
 * Runs the command line `args` (without the program name):
 *
 *     knot genus|alexander <expr>
 *     diagram genus|alexander <file.pd>
 *     tower report <file.json>
 *     catalog list
 *     catalog report <name>          built-in name, mask:<bits>, or file stem
 *
 * `--json` anywhere switches every command to JSON output.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toroidal::cli
