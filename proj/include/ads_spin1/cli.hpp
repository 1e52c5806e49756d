#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ads {

// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

// Full invariant suite; returns the report text and sets `ok`.
std::string selftest_report(bool& ok);

}  // namespace ads
