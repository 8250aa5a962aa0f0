#pragma once

// Built-in verification suites. Each check records the measured error next to
// its tolerance; a suite passes when every check does.

#include "output.hpp"

#include <string>
#include <vector>

namespace ghcs::cli {

inline const std::vector<std::string> kVerifySuites = {"moments", "eigen", "phase-norm", "coalesce", "all"};

struct VerifyResult {
    Json report;
    bool pass = true;
};

// Throws std::invalid_argument for an unknown suite name.
VerifyResult run_verify(const std::string& suite);

}  // namespace ghcs::cli
