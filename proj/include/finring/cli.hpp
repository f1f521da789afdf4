#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 *   finring [--json] [--max-order N] [--materialize N] [--seed S] [--dump-tables] <command>
 *     analyze <expr>
 *     table <expr> units|jacobson|sqrtj|nilpotents|idempotents|center|add|mul
 *     verify [--claims C1,C13] [--corpus path] [--threads N]
 *     enumerate zmod <max>
 *
 * An <expr> of the form @path loads a ring from a table dump file instead.
 * Exit codes: 0 success, 1 counterexample found, 2 usage/parse/limit error.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace finring {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace finring
