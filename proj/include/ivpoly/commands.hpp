#pragma once
/* Command layer behind the CLI. Each command returns its process exit code
 * plus a fully rendered report. Exit codes: 0 success/member, 1 checked-false
 * (non-member, failed suite), 2 usage/parse error, 3 internal invariant
 * violation.
 *
 * Reports are a single structured document: command, params, result,
 * witnesses, duration. The JSON rendering of one invocation is byte-identical
 * across runs except for the duration field; the text rendering is derived
 * from the same data. */

#include <cstdint>
#include <string>

namespace ivpoly {

struct CommandResult {
  int exit_code = 0;
  std::string report;
};

/* target: int | int-k:<k> | int-mod:<m> | int-multiset:<list> |
 * ext:<relations> | idealization:<module>,<k> (the module may instead ride on
 * the expression as "... over Z(+)...", in which case the target is
 * idealization:<k>; giving both only works when they agree). */
CommandResult cmd_member(const std::string& expr, const std::string& target,
                         const std::string& format);

/* selector: mod:<m> | diff:<k>. degree caps the slice at 64. conjecture
 * additionally runs the mod-4 comparison (selector must be mod:4). */
CommandResult cmd_basis(const std::string& selector, unsigned degree,
                        bool conjecture, const std::string& format);

CommandResult cmd_verify(const std::string& suite, std::uint64_t seed,
                         const std::string& format);

}  // namespace ivpoly
