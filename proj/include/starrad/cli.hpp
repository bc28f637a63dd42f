#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starrad/verify.hpp"

namespace starrad {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitBadArguments = 4;

struct RunConfig {
    std::string cls = "all";     // pi1 | pi2 | all
    std::string target = "all";  // region name | all
    std::vector<double> alphas = {0.0};
    int samples = 2048;
    double solver_tol = 1e-12;
    double tol_inside = 1e-9;
    double tol_touch = 1e-6;
    std::string format = "csv";  // csv | json | md
    std::string out;             // empty writes to stdout
    std::uint64_t seed = 0;
    bool plot = false;

    VerifyTolerances tolerances() const {
        return VerifyTolerances{tol_inside, tol_touch, solver_tol};
    }
};

int cmd_table(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_plot(const RunConfig& config);

/// Parse arguments (without the program name) and dispatch.
int run_cli(const std::vector<std::string>& args);

}  // namespace starrad
