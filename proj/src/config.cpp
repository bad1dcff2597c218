// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/config.hpp"

#include <cmath>
#include <fstream>

#include "switchsim/csv.hpp"
#include "switchsim/errors.hpp"

namespace switchsim {

using nlohmann::json;

namespace {

const char* kTasks[] = {"kernel", "rho", "optimize", "sweep-db",
                        "sweep-alpha", "mc", "oracle"};

bool known_task(const std::string& t) {
    for (const char* k : kTasks)
        if (t == k) return true;
    return false;
}

void apply_override(json& doc, const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override must look like key.path=value: " + spec);
    std::string path = spec.substr(0, eq);
    const std::string value = spec.substr(eq + 1);
    json* node = &doc;
    std::size_t pos = 0;
    for (;;) {
        const auto dot = path.find('.', pos);
        const std::string key = path.substr(pos, dot - pos);
        if (key.empty()) throw ConfigError("bad override path: " + spec);
        if (dot == std::string::npos) {
            json parsed = json::parse(value, nullptr, false);
            (*node)[key] = parsed.is_discarded() ? json(value) : parsed;
            return;
        }
        node = &(*node)[key];
        pos = dot + 1;
    }
}

} // namespace

ExperimentConfig ExperimentConfig::load(const std::string& path,
                                        const std::vector<std::string>& overrides,
                                        const std::string& cli_task) {
    ExperimentConfig cfg;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ConfigError("config file does not exist: " + path);
        try {
            in >> cfg.doc_;
        } catch (const json::exception& e) {
            throw ConfigError(std::string("config parse error: ") + e.what());
        }
    } else {
        cfg.doc_ = json::object();
    }
    for (const auto& o : overrides) apply_override(cfg.doc_, o);

    if (cfg.doc_.contains("task")) {
        const std::string t = cfg.doc_["task"].get<std::string>();
        if (!known_task(t)) throw ConfigError("unknown task in config: " + t);
        if (!cli_task.empty() && t != cli_task)
            throw ConfigError("config task '" + t + "' conflicts with subcommand '" +
                              cli_task + "'");
        cfg.task_ = t;
    } else {
        cfg.task_ = cli_task;
    }
    if (cfg.task_.empty()) throw ConfigError("no task selected");
    cfg.validate();
    return cfg;
}

void ExperimentConfig::validate() const {
    if (!doc_.contains("medium")) return; // defaults kick in
    const json& m = doc_["medium"];
    const bool dimless = m.contains("d_b") || m.contains("L_over_zb") ||
                         m.contains("omega_over_gamma");
    const bool primaries = m.contains("gamma") || m.contains("omega") ||
                           m.contains("G") || m.contains("C6") ||
                           m.contains("L") || m.contains("c");
    if (dimless && primaries)
        throw ConfigError("medium block mixes dimensionless and primary forms");
    medium(); // range validation via the constructors
}

MediumParams ExperimentConfig::medium() const {
    if (!doc_.contains("medium")) return MediumParams::dimensionless(10.0, 4.0);
    const json& m = doc_["medium"];
    try {
        if (m.contains("gamma")) {
            return MediumParams::from_primaries(
                m.at("gamma").get<double>(), m.at("omega").get<double>(),
                m.at("G").get<double>(), m.at("C6").get<double>(),
                m.at("L").get<double>(), m.at("c").get<double>());
        }
        return MediumParams::dimensionless(m.at("d_b").get<double>(),
                                           m.at("L_over_zb").get<double>(),
                                           m.value("omega_over_gamma", 1.0));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid medium: ") + e.what());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid medium block: ") + e.what());
    }
}

MediumParams ExperimentConfig::medium_with(double d_b, double L_over_zb) const {
    const double og =
        doc_.contains("medium") ? doc_["medium"].value("omega_over_gamma", 1.0) : 1.0;
    return MediumParams::dimensionless(d_b, L_over_zb, og);
}

PulseEnvelope ExperimentConfig::pulse_for(const MediumParams& p) const {
    std::string shape = "square";
    double mult = 50.0;
    if (doc_.contains("pulse")) {
        shape = doc_["pulse"].value("shape", shape);
        mult = doc_["pulse"].value("duration_multiplier", mult);
    }
    if (!(mult > 0)) throw ConfigError("pulse.duration_multiplier must be positive");
    const double T = mult * std::sqrt(p.d()) / p.gamma_eit();
    if (shape == "square") return PulseEnvelope::square(T);
    if (shape == "gaussian") return PulseEnvelope::gaussian(T);
    throw ConfigError("pulse.shape must be 'square' or 'gaussian'");
}

FrequencyGrid ExperimentConfig::frequency_grid_for(const PulseEnvelope& pulse) const {
    double span_factor = 16.0;
    std::size_t n_half = 2048;
    if (doc_.contains("grids")) {
        span_factor = doc_["grids"].value("span_factor", span_factor);
        n_half = doc_["grids"].value("frequency_half_points", n_half);
    }
    if (!(span_factor >= 8.0))
        throw ConfigError("grids.span_factor must be at least 8 (pulse bandwidth rule)");
    return FrequencyGrid::span(span_factor / pulse.duration(), n_half);
}

SpatialGrid ExperimentConfig::spatial_grid_for(const MediumParams& p) const {
    const std::size_t ppzb = points_per_zb();
    const auto n = static_cast<std::size_t>(
        std::ceil(p.length_L() / p.z_b() * static_cast<double>(ppzb) - 1e-9));
    return SpatialGrid::uniform(p.length_L(), n);
}

std::size_t ExperimentConfig::points_per_zb() const {
    const std::size_t v =
        doc_.contains("grids") ? doc_["grids"].value("points_per_zb", 24u) : 24u;
    if (v == 0) throw ConfigError("grids.points_per_zb must be positive");
    return v;
}

std::size_t ExperimentConfig::oracle_points_per_zb() const {
    const std::size_t v =
        doc_.contains("grids") ? doc_["grids"].value("oracle_points_per_zb", 16u) : 16u;
    if (v == 0) throw ConfigError("grids.oracle_points_per_zb must be positive");
    return v;
}

std::size_t ExperimentConfig::time_points() const {
    const std::size_t v =
        doc_.contains("grids") ? doc_["grids"].value("time_points", 256u) : 256u;
    if (v < 2) throw ConfigError("grids.time_points must be at least 2");
    return v;
}

std::uint64_t ExperimentConfig::seed() const {
    return doc_.value("seed", std::uint64_t{20260810});
}

std::string ExperimentConfig::config_hash() const {
    const std::string s = doc_.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::string> ExperimentConfig::metadata(const MediumParams& p) const {
    std::vector<std::string> out;
    out.push_back("config_hash=" + config_hash());
    out.push_back("units: gamma=1 c=1 z_b=" + CsvWriter::format_double(p.z_b()) +
                  " (lengths in z_b, rates in gamma)");
    char buf[160];
    std::snprintf(buf, sizeof(buf), "medium: d_b=%.12g L_over_zb=%.12g omega_over_gamma=%.12g",
                  p.d_b(), p.length_L() / p.z_b(), p.omega_ctrl() / p.gamma());
    out.emplace_back(buf);
    return out;
}

double ExperimentConfig::get_or(const std::string& task_key, const std::string& key,
                                double dflt) const {
    if (!doc_.contains(task_key)) return dflt;
    return doc_[task_key].value(key, dflt);
}

} // namespace switchsim
