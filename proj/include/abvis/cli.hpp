#pragma once

#include <string>
#include <vector>

namespace abvis {

// Runs the command-line front end. Returns 0 on success, 1 on argument or
// I/O errors, 2 when a verification subcommand fails a check.
int cli_run(const std::vector<std::string>& args);

} // namespace abvis
