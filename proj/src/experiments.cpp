// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/experiments.hpp"

#include <cmath>
#include <filesystem>

#include "switchsim/csv.hpp"
#include "switchsim/density_matrix.hpp"
#include "switchsim/errors.hpp"
#include "switchsim/gate_stats.hpp"
#include "switchsim/kernels.hpp"
#include "switchsim/oracle.hpp"
#include "switchsim/parallel.hpp"
#include "switchsim/storage.hpp"

namespace switchsim {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

std::vector<double> list_or(const json& doc, const std::string& block,
                            const std::string& key, std::vector<double> dflt) {
    if (doc.contains(block) && doc[block].contains(key))
        return doc[block][key].get<std::vector<double>>();
    return dflt;
}

std::string tag(double v) {
    std::string s = std::to_string(v);
    while (!s.empty() && (s.back() == '0')) s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    for (auto& c : s)
        if (c == '.') c = 'p';
    return s;
}

} // namespace

int run_kernel_dump(const ExperimentConfig& cfg, const std::string& out_dir) {
    const MediumParams p = cfg.medium();
    const PulseEnvelope pulse = cfg.pulse_for(p);
    const SpatialGrid zg = cfg.spatial_grid_for(p);
    std::vector<double> exc =
        list_or(cfg.json(), "kernel", "excitations", {0.0, p.z_b(), 2.0 * p.z_b()});

    const FrequencyGrid wg = cfg.frequency_grid_for(pulse);
    KernelTable table;
    std::string cache;
    if (cfg.json().contains("kernel"))
        cache = cfg.json()["kernel"].value("cache", std::string{});
    bool loaded = false;
    if (!cache.empty()) {
        if (auto t = load_kernel_table(cache, p, zg, wg, exc)) {
            table = std::move(*t);
            loaded = true;
        }
    }
    if (!loaded) {
        table = build_kernel_table(p, zg, wg, exc);
        if (!cache.empty()) save_kernel_table(table, cache);
    }

    CsvWriter csv(join(out_dir, "kernel_static.csv"), cfg.json_mirror());
    for (const auto& c : cfg.metadata(p)) csv.comment(c);
    csv.header({"z_over_zb", "x_over_zb", "abs", "re", "im"});
    for (double x : exc)
        for (std::size_t i = 0; i < zg.size(); ++i) {
            const cplx v = static_kernel(p, zg.points[i], x);
            csv.row({zg.points[i] / p.z_b(), x / p.z_b(), std::abs(v), v.real(),
                     v.imag()});
        }

    CsvWriter csvw(join(out_dir, "kernel_spectral.csv"), cfg.json_mirror());
    for (const auto& c : cfg.metadata(p)) csvw.comment(c);
    csvw.header({"x_over_zb", "z_over_zb", "omega_over_gamma", "re_e0", "im_e0",
                 "re_k", "im_k"});
    const std::size_t wstride = std::max<std::size_t>(1, table.nw() / 64);
    const std::size_t zstride = std::max<std::size_t>(1, table.nz() / 32);
    for (std::size_t ix = 0; ix < table.nx(); ++ix)
        for (std::size_t iz = 0; iz < table.nz(); iz += zstride)
            for (std::size_t iw = 0; iw < table.nw(); iw += wstride) {
                const cplx e0 = table.e0_at(iz, iw);
                const cplx k = table.spin_row(ix, iz)[iw];
                csvw.row({exc[ix] / p.z_b(), zg.points[iz] / p.z_b(),
                          wg.omegas[iw] / p.gamma(), e0.real(), e0.imag(), k.real(),
                          k.imag()});
            }
    return 2;
}

int run_rho_heatmaps(const ExperimentConfig& cfg, const std::string& out_dir) {
    const std::vector<double> db_list =
        list_or(cfg.json(), "rho", "d_b_list", {1.0, 10.0});
    std::vector<double> n_list = list_or(cfg.json(), "rho", "n_list", {1, 10, 100});
    const double L_over_zb =
        cfg.json().contains("medium") && cfg.json()["medium"].contains("L_over_zb")
            ? cfg.json()["medium"]["L_over_zb"].get<double>()
            : 4.0;
    int files = 0;
    for (double db : db_list) {
        const MediumParams p = cfg.medium_with(db, L_over_zb);
        const SpatialGrid zg = cfg.spatial_grid_for(p);
        PhiMatrixOptions opt;
        const auto phi = phi_pair_matrix(p, zg, opt);
        DensityMatrixGrid rho0 = identity_rescaled(p, zg);
        for (double nd : n_list) {
            const long n = static_cast<long>(std::llround(nd));
            DensityMatrixGrid rho = rho_fock(rho0, phi, n);
            const std::string name =
                "rho_db" + tag(db) + "_n" + std::to_string(n) + ".csv";
            export_heatmap_csv(rho, p, join(out_dir, name), cfg.metadata(p),
                               cfg.json_mirror());
            ++files;
        }
        // boundary cut with the analytic overlay
        CsvWriter cut(join(out_dir, "rho_cut_db" + tag(db) + ".csv"),
                      cfg.json_mirror());
        for (const auto& c : cfg.metadata(p)) cut.comment(c);
        cut.header({"x_over_zb", "n", "abs_numeric", "abs_analytic"});
        const double y0 = zg.points.front();
        for (double nd : n_list) {
            const long n = static_cast<long>(std::llround(nd));
            DensityMatrixGrid rho = rho_fock(rho0, phi, n);
            for (std::size_t i = 0; i < zg.size(); ++i) {
                if (zg.points[i] > p.z_b() * 1.5) break;
                cut.row({zg.points[i] / p.z_b(), static_cast<double>(n),
                         std::abs(rho.at(i, 0)),
                         rho_boundary_analytic(p, zg.points[i], y0, n)});
            }
        }
        ++files;
    }
    return files;
}

int run_optimize(const ExperimentConfig& cfg, const std::string& out_dir) {
    const MediumParams p = cfg.medium();
    const double omega_g = cfg.get_or("optimize", "omega_g", 1.0);
    const double t_factor = cfg.get_or("optimize", "T_factor", 20.0);
    const StorageControl ctrl{omega_g, t_factor * p.gamma() / (omega_g * omega_g)};
    OptimizeOptions oopt;
    oopt.time_points = cfg.time_points();
    oopt.points_per_zb = cfg.points_per_zb();

    const double n_photons = cfg.get_or("optimize", "n_photons", 1.0);
    const double alpha = cfg.get_or("optimize", "alpha", -1.0);

    const SpatialGrid zg = cfg.spatial_grid_for(p);
    DensityMatrixGrid rho = build_rho1(p, zg);
    if (alpha >= 0.0) {
        rho = rho_coherent(rho, alpha);
    } else {
        const auto phi = phi_pair_matrix(p, zg);
        rho = rho_fock(identity_rescaled(p, zg), phi,
                       static_cast<long>(std::llround(n_photons)));
    }
    const OptimizeResult res = optimize_switch_fixed(p, &rho, ctrl, oopt);

    CsvWriter summary(join(out_dir, "optimize_summary.csv"), cfg.json_mirror());
    for (const auto& c : cfg.metadata(p)) summary.comment(c);
    summary.header({"d_b", "L_over_zb", "photons_or_alpha_sq", "eta", "iterations"});
    summary.row({p.d_b(), p.length_L() / p.z_b(),
                 alpha >= 0 ? alpha * alpha : n_photons, res.eta,
                 static_cast<double>(res.eta_trace.size())});
    int files = 1;

    if (cfg.get_or("optimize", "emit_mode", 1.0) != 0.0) {
        CsvWriter mode(join(out_dir, "optimize_mode.csv"), cfg.json_mirror());
        for (const auto& c : cfg.metadata(p)) mode.comment(c);
        mode.header({"z_over_zb", "abs_C", "re_C", "im_C"});
        for (std::size_t i = 0; i < res.mode.grid.size(); ++i)
            mode.row({res.mode.grid.points[i] / p.z_b(), std::abs(res.mode.C[i]),
                      res.mode.C[i].real(), res.mode.C[i].imag()});
        ++files;
    }
    if (cfg.get_or("optimize", "emit_envelope", 1.0) != 0.0) {
        CsvWriter env(join(out_dir, "optimize_envelope.csv"), cfg.json_mirror());
        for (const auto& c : cfg.metadata(p)) env.comment(c);
        env.header({"t_gamma", "abs_h", "re_h", "im_h"});
        for (std::size_t a = 0; a < res.tg.size(); ++a)
            env.row({res.tg.t[a] * p.gamma(), std::abs(res.envelope[a]),
                     res.envelope[a].real(), res.envelope[a].imag()});
        ++files;
    }
    return files;
}

int run_length_sweep(const ExperimentConfig& cfg, const std::string& out_dir) {
    const std::vector<double> db_grid = list_or(
        cfg.json(), "sweep_db", "d_b_grid", {0.5, 1.0, 2.0, 4.0, 7.0, 10.0});
    const std::vector<double> L_list =
        list_or(cfg.json(), "sweep_db", "L_list", {1.0, 2.0, 4.0});
    const long n = static_cast<long>(cfg.get_or("sweep_db", "n_photons", 1.0));

    struct Point {
        double db, L, eta;
    };
    std::vector<Point> pts;
    for (double L : L_list)
        for (double db : db_grid) pts.push_back({db, L, 0.0});

    parallel_for(pts.size(), [&](std::size_t k) {
        const MediumParams p = cfg.medium_with(pts[k].db, pts[k].L);
        const SpatialGrid zg = cfg.spatial_grid_for(p);
        const auto phi = phi_pair_matrix(p, zg);
        DensityMatrixGrid rho = rho_fock(identity_rescaled(p, zg), phi, n);
        const double omega_g = cfg.get_or("sweep_db", "omega_g", 1.0);
        const StorageControl ctrl{omega_g, 20.0 * p.gamma() / (omega_g * omega_g)};
        OptimizeOptions oopt;
        oopt.time_points = cfg.time_points();
        pts[k].eta = optimize_switch_fixed(p, &rho, ctrl, oopt).eta;
    });

    const MediumParams pm = cfg.medium_with(db_grid.front(), L_list.front());
    CsvWriter csv(join(out_dir, "eta_vs_db.csv"), cfg.json_mirror());
    for (const auto& c : cfg.metadata(pm)) csv.comment(c);
    csv.header({"d_b", "L_over_zb", "n", "eta"});
    for (const auto& pt : pts)
        csv.row({pt.db, pt.L, static_cast<double>(n), pt.eta});
    return 1;
}

int run_intensity_sweep(const ExperimentConfig& cfg, const std::string& out_dir) {
    const double d = cfg.get_or("sweep_alpha", "d", 50.0);
    const std::vector<double> db_list =
        list_or(cfg.json(), "sweep_alpha", "d_b_list", {1.0, 4.0, 10.0});
    const std::vector<double> a2_grid = list_or(
        cfg.json(), "sweep_alpha", "alpha_sq_grid", {0.0, 0.5, 1.0, 2.0, 3.0, 4.5, 6.0});

    CsvWriter csv(join(out_dir, "eta_vs_alpha.csv"), cfg.json_mirror());
    const MediumParams pm = cfg.medium_with(db_list.front(), d / db_list.front());
    for (const auto& c : cfg.metadata(pm)) csv.comment(c);
    csv.header({"d_b", "alpha_sq", "eta", "vacuum_floor"});

    for (double db : db_list) {
        const double L_over_zb = d / db;
        const MediumParams p = cfg.medium_with(db, L_over_zb);
        // long media at small d_b: scale the grid down to keep runs bounded
        std::size_t ppzb = cfg.points_per_zb();
        if (L_over_zb > 20.0) ppzb = std::min<std::size_t>(ppzb, 16);
        const auto n = static_cast<std::size_t>(std::ceil(L_over_zb * ppzb - 1e-9));
        const SpatialGrid zg = SpatialGrid::uniform(p.length_L(), n);
        const DensityMatrixGrid rho1 = build_rho1(p, zg);
        const double omega_g = cfg.get_or("sweep_alpha", "omega_g", 1.0);
        const StorageControl ctrl{omega_g, 20.0 * p.gamma() / (omega_g * omega_g)};
        OptimizeOptions oopt;
        oopt.time_points = cfg.time_points();

        std::vector<double> etas(a2_grid.size(), 0.0);
        double eta0 = 0.0;
        for (std::size_t k = 0; k < a2_grid.size(); ++k) {
            DensityMatrixGrid rho = rho_coherent(rho1, std::sqrt(a2_grid[k]));
            etas[k] = optimize_switch_fixed(p, &rho, ctrl, oopt).eta;
            if (k == 0 && a2_grid[k] == 0.0) eta0 = etas[k];
        }
        if (eta0 == 0.0)
            eta0 = optimize_switch_fixed(p, nullptr, ctrl, oopt).eta;
        for (std::size_t k = 0; k < a2_grid.size(); ++k)
            csv.row({db, a2_grid[k], etas[k], vacuum_floor(a2_grid[k], eta0)});
    }
    return 1;
}

int run_mc_sweep(const ExperimentConfig& cfg, const std::string& out_dir) {
    GateEnsembleParams gp;
    gp.alpha_g_sq = cfg.get_or("mc", "alpha_g_sq", 0.5);
    gp.eta0 = cfg.get_or("mc", "eta0", 1.0);
    gp.p_sc = cfg.get_or("mc", "p_sc", -1.0);
    const auto trials =
        static_cast<std::uint64_t>(cfg.get_or("mc", "trials", 1e6));
    const std::vector<double> a2_grid = list_or(
        cfg.json(), "mc", "alpha_sq_grid", {0.0, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0});

    const MediumParams p = cfg.medium();
    bool from_medium = false;
    if (cfg.json().contains("mc"))
        from_medium = cfg.json()["mc"].value("from_medium", false);
    if (from_medium) {
        if (gp.p_sc >= 0.0)
            throw ConfigError("mc: give either p_sc or from_medium, not both");
        const StorageControl ctrl{1.0, 20.0 * p.gamma()};
        OptimizeOptions oopt;
        oopt.time_points = cfg.time_points();
        const OptimizeResult base = optimize_switch_fixed(p, nullptr, ctrl, oopt);
        gp.eta0 = base.eta;
        std::vector<double> dens(base.mode.grid.size());
        const double nrm = base.mode.norm2();
        for (std::size_t i = 0; i < dens.size(); ++i)
            dens[i] = std::norm(base.mode.C[i]) / nrm;
        gp.p_sc = p_scatter(p, base.mode.grid, dens);
    } else if (gp.p_sc < 0.0) {
        gp.p_sc = 0.02;
    }

    CsvWriter csv(join(out_dir, "mc_efficiency.csv"), cfg.json_mirror());
    for (const auto& c : cfg.metadata(p)) csv.comment(c);
    csv.comment("p_sc=" + CsvWriter::format_double(gp.p_sc) +
                " alpha_g_sq=" + CsvWriter::format_double(gp.alpha_g_sq) +
                " eta0=" + CsvWriter::format_double(gp.eta0));
    csv.header({"alpha_sq", "alpha_sc_sq", "eta_mc", "stderr", "eta_analytic"});
    std::vector<McResult> results(a2_grid.size());
    for (std::size_t k = 0; k < a2_grid.size(); ++k) {
        GateEnsembleParams gk = gp;
        gk.alpha_sq = a2_grid[k];
        results[k] = mc_efficiency(gk, trials, cfg.seed());
    }
    for (std::size_t k = 0; k < a2_grid.size(); ++k) {
        const double asc = alpha_sc_from_alpha(a2_grid[k], gp.alpha_g_sq, gp.p_sc);
        csv.row({a2_grid[k], asc, results[k].eta, results[k].stderr_eta,
                 eta_exponential(asc, gp.alpha_g_sq, gp.eta0)});
    }
    return 1;
}

int run_oracle_dump(const ExperimentConfig& cfg, const std::string& out_dir) {
    const MediumParams p = cfg.medium();
    const PulseEnvelope pulse = cfg.pulse_for(p);
    const double x0_zb = cfg.get_or("oracle", "x0_over_zb", 1.0);
    const bool bare = cfg.json().contains("oracle") &&
                      cfg.json()["oracle"].value("no_excitation", false);
    OracleOptions opt;
    opt.points_per_zb = cfg.oracle_points_per_zb();
    opt.sample_stride = static_cast<std::size_t>(cfg.get_or("oracle", "stride", 16.0));
    const double t_end = pulse.duration() + 2.0 * p.length_L() / p.speed_c() +
                         20.0 / p.gamma();
    const FieldHistory h = integrate_fixed_excitation(
        p, bare ? std::optional<double>{} : std::optional<double>{x0_zb * p.z_b()},
        pulse, t_end, opt);

    CsvWriter csv(join(out_dir, "oracle_fields.csv"), cfg.json_mirror());
    for (const auto& c : cfg.metadata(p)) csv.comment(c);
    csv.comment("flux: input=" + CsvWriter::format_double(h.input_flux) +
                " transmitted=" + CsvWriter::format_double(h.transmitted_flux) +
                " absorbed=" + CsvWriter::format_double(h.absorbed_flux));
    csv.header({"t_gamma", "z_over_zb", "re_E", "im_E", "re_S", "im_S"});
    for (std::size_t it = 0; it < h.nt(); ++it)
        for (std::size_t iz = 0; iz < h.nz(); ++iz) {
            const cplx e = h.e_at(it, iz), s = h.s_at(it, iz);
            csv.row({h.times[it] * p.gamma(), h.grid.points[iz] / p.z_b(), e.real(),
                     e.imag(), s.real(), s.imag()});
        }
    return 1;
}

int run_task(const ExperimentConfig& cfg, const std::string& out_dir) {
    fs::create_directories(out_dir);
    const std::string& t = cfg.task();
    if (t == "kernel") return run_kernel_dump(cfg, out_dir);
    if (t == "rho") return run_rho_heatmaps(cfg, out_dir);
    if (t == "optimize") return run_optimize(cfg, out_dir);
    if (t == "sweep-db") return run_length_sweep(cfg, out_dir);
    if (t == "sweep-alpha") return run_intensity_sweep(cfg, out_dir);
    if (t == "mc") return run_mc_sweep(cfg, out_dir);
    if (t == "oracle") return run_oracle_dump(cfg, out_dir);
    throw ConfigError("unknown task: " + t);
}

} // namespace switchsim
