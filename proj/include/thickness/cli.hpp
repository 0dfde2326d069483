#pragma once

#include <optional>
#include <string>

namespace thickness {

// Outcome contract shared by all subcommands:
//   exit 0  success / verified
//   exit 1  verification failure, refutation witness failure, or a bound
//           beyond the materialization budget
//   exit 2  invalid input or parameters
struct CommandOutcome {
    int exit_code = 0;
    std::string summary;
    std::optional<std::string> payload_path;
    std::optional<std::string> svg_path;
};

int run_cli(int argc, const char* const* argv);

} // namespace thickness
