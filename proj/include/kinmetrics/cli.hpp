#pragma once
// Command-line front end. Subcommands: validate, score, rank, detect,
// compare, report, synth, power. Exit codes: 0 success, 1 data/validation
// failure, 2 usage error. Logs go to stderr; data goes to files or stdout.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace kinmetrics {

struct CliInvocation {
    std::string subcommand;
    std::filesystem::path input_dir;
    std::filesystem::path output_dir;
    std::optional<std::filesystem::path> config_path;  // overrides <in>/config.toml
    std::string format = "csv";                        // csv | json
    std::optional<uint64_t> seed;
    std::string dimension = "overall";  // compare only
    int replications = 100;             // power only
    int verbosity = 0;                  // -1 quiet, 0 normal, 1 verbose
};

// Executes one parsed invocation.
int run(const CliInvocation& invocation);

// Parses argv and runs. Never throws; malformed input maps to exit codes.
int run_main(int argc, const char* const* argv);

}  // namespace kinmetrics
