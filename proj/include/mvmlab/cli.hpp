#ifndef MVMLAB_CLI_HPP
#define MVMLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mvmlab/term.hpp"

namespace mvmlab {

/// Exit codes: 0 pass or witness found, 1 verification failure or nothing
/// found, 2 usage or input error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Equations one per line; `const NAME` declares a constant, `axioms mvm`
/// pulls in A1..A7, `#` starts a comment line. Throws ParseError with the
/// line number.
struct ProblemFile {
  std::vector<std::string> constants;
  std::vector<Equation> equations;
};
ProblemFile parse_problem(std::string_view text,
                          const std::vector<std::string>& extra_constants = {});

}  // namespace mvmlab

#endif  // MVMLAB_CLI_HPP
