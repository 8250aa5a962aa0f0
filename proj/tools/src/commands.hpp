#pragma once

// Command implementations behind the `ghcs` executable. Each returns the text
// to emit and the process exit code; library exceptions propagate to main,
// which maps them onto exit codes.

#include "output.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ghcs::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitInvalidParameters = 2,
    kExitUsage = 64,
    kExitNumeric = 65,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string a;  // comma-separated re+imi lists
    std::string b;
    std::optional<std::string> z;
    std::optional<double> r;
    double phi = 0.0;
    double tol = 1e-12;
    std::string format = "csv";
    std::string out;
    std::size_t cap = 4096;

    // stats
    std::optional<double> r_max;
    std::size_t r_count = 61;
    // weight
    std::optional<double> x_max;
    std::size_t count = 201;
    // moment-check
    std::size_t n_max = 20;
    double threshold = 1e-6;
    // phase, gh-phase
    std::string analyzer = "Q";
    std::string signal_a;
    std::string signal_b;
    std::size_t theta_count = 721;
    double theta_start = -3.141592653589793;
    // figure
    int figure = 0;
    std::string values;
    // verify
    std::string suite = "all";

    // Options as given on the command line, echoed into the output header.
    std::vector<std::pair<std::string, std::string>> echo;
};

struct Outcome {
    std::string text;
    int code = kExitOk;
};

Outcome run_command(const RunConfig& cfg);

}  // namespace ghcs::cli
