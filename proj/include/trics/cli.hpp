// cli.hpp — command-line front end, exposed as a function so tests can drive
// it in-process and assert on exit codes and byte-identical output.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trics::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numeric = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trics::cli
