// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace switchsim {

// Exit-code contract of the CLI: 0 success, 2 config/usage, 3 numerical
// consistency, 4 non-convergence.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
    static constexpr int exit_code = 2;
};

struct NumericalConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
    static constexpr int exit_code = 3;
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg, std::vector<double> trace = {})
        : std::runtime_error(msg), iteration_trace(std::move(trace)) {}
    static constexpr int exit_code = 4;
    std::vector<double> iteration_trace;
};

} // namespace switchsim
