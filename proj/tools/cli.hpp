#ifndef PATCHGLUE_CLI_HPP
#define PATCHGLUE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace patchglue::cli {

/// Runs one subcommand (validate | strata | chi | glue | patchwork | render).
/// Reports are written as JSON to `out` or to --out. Exit codes: 0 success,
/// 1 validation failure or verdict DISAGREE (the report is still written),
/// 2 malformed input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patchglue::cli

#endif  // PATCHGLUE_CLI_HPP
