// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "switchsim/grids.hpp"
#include "switchsim/medium.hpp"

namespace switchsim {

/// Parsed experiment configuration. The JSON document is retained so task
/// blocks can carry task-specific keys; common blocks are validated here.
class ExperimentConfig {
public:
    /// Parse from a JSON file (empty path: all defaults), then apply
    /// key=value overrides with dotted paths (values parsed as JSON when
    /// possible, else taken as strings).
    static ExperimentConfig load(const std::string& path,
                                 const std::vector<std::string>& overrides,
                                 const std::string& cli_task);

    const nlohmann::json& json() const { return doc_; }
    const std::string& task() const { return task_; }

    /// Medium from the "medium" block; either the dimensionless triple or
    /// the six primaries, never both. Optional per-call replacements for
    /// sweep points.
    MediumParams medium() const;
    MediumParams medium_with(double d_b, double L_over_zb) const;

    /// Target pulse: shape and duration multiplier m, T = m sqrt(d)/Gamma_EIT.
    PulseEnvelope pulse_for(const MediumParams& p) const;
    FrequencyGrid frequency_grid_for(const PulseEnvelope& pulse) const;
    SpatialGrid spatial_grid_for(const MediumParams& p) const;

    std::size_t points_per_zb() const;
    std::size_t oracle_points_per_zb() const;
    std::size_t time_points() const;
    std::uint64_t seed() const;
    bool json_mirror() const { return json_mirror_; }
    void set_json_mirror(bool v) { json_mirror_ = v; }

    /// FNV-1a hash of the canonical serialized document (stable key order).
    std::string config_hash() const;

    /// Standard CSV metadata lines: config hash plus the unit convention.
    std::vector<std::string> metadata(const MediumParams& p) const;

    double get_or(const std::string& task_key, const std::string& key, double dflt) const;

private:
    void validate() const;
    nlohmann::json doc_;
    std::string task_;
    bool json_mirror_ = false;
};

} // namespace switchsim
