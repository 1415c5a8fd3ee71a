#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gammakit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kGuardViolation = 3,
};

struct CommandConfig {
    /// Leaf subcommand path, e.g. "ribbon expand".
    std::string command;
    /// Composition, shape or graph text, depending on the command.
    std::string target;
    /// "X" or "Y" for chromatic.
    std::string kind;
    std::string family = "b1";
    bool json = false;
    std::optional<int> max_n;
    std::optional<int> n;
    std::optional<int> vars;
    /// Defaults to the hardware thread count.
    int threads = 1;
    std::string cache;
};

/// Parses arguments (without the program name). Throws gammakit::ParseError
/// on malformed input; `help` receives the help text when it was requested.
std::optional<CommandConfig> parse_command(const std::vector<std::string>& args, std::string* help = nullptr);

int execute(const CommandConfig& config, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace gammakit::cli
