#pragma once
/* Property suite: every check pits an implementation path against an
 * independent oracle or replays a frozen identity, at the sample sizes the
 * project promises. Checks are pure functions of their seed; the runner may
 * execute them in parallel (capped by IVPOLY_THREADS) and always reports in
 * id order. */

#include <cstdint>
#include <string>
#include <vector>

namespace ivpoly {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;
  bool all_pass() const;
  std::string to_string() const;
};

/* Suites: "all", "section2".."section5" (the thematic groups: closed
 * evaluation, difference calculus and bases, idealization, torsion), plus
 * "core" for the shared exact-arithmetic layer. Unknown suite throws
 * std::invalid_argument. */
SuiteReport run_suite(const std::string& suite,
                      std::uint64_t seed = 20260816ULL);

/* All check ids of a suite, in report order. */
std::vector<std::string> suite_check_ids(const std::string& suite);

}  // namespace ivpoly
