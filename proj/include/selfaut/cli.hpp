#ifndef SELFAUT_CLI_HPP_
#define SELFAUT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace selfaut::cli {

  // Exit statuses.
  inline constexpr int ok        = 0;  // success, or a query answered "yes"
  inline constexpr int negative  = 1;  // a query answered "no"
  inline constexpr int usage     = 2;  // bad arguments or unusable input
  inline constexpr int exhausted = 3;  // budgets ran out before an answer
  inline constexpr int internal  = 4;  // two independent checks disagreed

  //! Runs the command line tool. `args` excludes the program name. Results
  //! go to `out`, diagnostics to `err`.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace selfaut::cli

#endif  // SELFAUT_CLI_HPP_
