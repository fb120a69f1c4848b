#pragma once

#include <string>
#include <vector>

namespace aowf::cli {

/// Runs one CLI invocation (tokens exclude the program name) and returns the
/// exit status: 0 on success/pass, 1 when a checked property is violated or a
/// search comes back empty, 2 on usage or configuration errors.
int run_command(const std::vector<std::string>& args);

}  // namespace aowf::cli
