#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace netid::cli {

enum ExitCode : int {
    kOk = 0,                 ///< no necessary condition violated / identifiable
    kNotIdentifiable = 1,
    kUsageOrIo = 2,
    kNumericFailure = 3,
};

struct CliOptions {
    std::string subcommand;
    std::string input;
    bool json = false;
    std::uint64_t seed = 42;
    int trials = 5;
    double tolerance = 1e-8;
    int max_subset = 0;  ///< 0: unlimited
    std::optional<std::string> dot_path;
    bool with_removals = false;
    bool recover = false;
};

int cmd_analyze(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_circular(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bipartite(const CliOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace netid::cli
