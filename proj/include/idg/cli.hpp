#ifndef IDG_CLI_HPP
#define IDG_CLI_HPP

#include "idg/report.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace idg::cli {

// executes one subcommand; prints the report (text, or json with --json)
// and returns the exit code: 0 pass, 1 property failure, 2 input error
int run(const std::vector<std::string>& args, std::ostream& out);

// the same, returning the report for in-process callers
int run(const std::vector<std::string>& args, std::ostream& out, Report& report);

}   // namespace idg::cli

#endif
