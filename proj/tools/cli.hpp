/*
  cli.hpp — command-line front end.

  Exit codes: 0 success, 1 failed verification checks, 2 usage or
  validation errors.
*/
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylbranch::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weylbranch::cli
