#ifndef ISGA_CLI_HPP_
#define ISGA_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace isga {

  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_domain_error = 1;
  inline constexpr int exit_usage_error  = 2;

  // Version of the JSON documents written by --json.
  inline constexpr int json_schema_version = 1;

  // Runs the command line `args` (without the program name), writing the
  // report to `out` and diagnostics to `err`. Returns the exit status.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace isga

#endif  // ISGA_CLI_HPP_
