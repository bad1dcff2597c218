// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "switchsim/config.hpp"

namespace switchsim {

// Experiment drivers behind the CLI tasks. Each writes one or more CSV
// files (with config-hash metadata) under out_dir and returns the number of
// files written. Identical config + seed produces byte-identical output.

int run_kernel_dump(const ExperimentConfig& cfg, const std::string& out_dir);
int run_rho_heatmaps(const ExperimentConfig& cfg, const std::string& out_dir);
int run_optimize(const ExperimentConfig& cfg, const std::string& out_dir);
int run_length_sweep(const ExperimentConfig& cfg, const std::string& out_dir);
int run_intensity_sweep(const ExperimentConfig& cfg, const std::string& out_dir);
int run_mc_sweep(const ExperimentConfig& cfg, const std::string& out_dir);
int run_oracle_dump(const ExperimentConfig& cfg, const std::string& out_dir);

/// Dispatch on cfg.task().
int run_task(const ExperimentConfig& cfg, const std::string& out_dir);

} // namespace switchsim
