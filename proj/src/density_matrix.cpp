// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "switchsim/csv.hpp"
#include "switchsim/errors.hpp"
#include "switchsim/parallel.hpp"
#include "switchsim/quadrature.hpp"
#include "switchsim/simd.hpp"

namespace switchsim {

namespace {

double pow6(double x) {
    const double x2 = x * x;
    return x2 * x2 * x2;
}

} // namespace

double DensityMatrixGrid::max_hermiticity_defect() const {
    const std::size_t n = size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (!in_band(i, j)) continue;
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
        }
    return worst;
}

void DensityMatrixGrid::check_rescaled_bounds(double tol) const {
    if (!rescaled) return;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(at(i, i) - cplx(1.0, 0.0)) > tol)
            throw NumericalConsistencyError("rescaled matrix diagonal differs from 1");
        for (std::size_t j = 0; j < n; ++j)
            if (in_band(i, j) && std::abs(at(i, j)) > 1.0 + tol)
                throw NumericalConsistencyError("rescaled matrix entry above unit modulus");
    }
}

cplx closed_form_phi(const MediumParams& p, double x, double y) {
    const double zb6 = pow6(p.z_b());
    return 2.0 * zb6 / cplx(2.0 * zb6, pow6(x) - pow6(y)) - 1.0;
}

double rho_boundary_analytic(const MediumParams& p, double x, double y, long n) {
    if (n < 0) throw std::invalid_argument("rho_boundary_analytic: n must be >= 0");
    const double d = pow6(x) - pow6(y);
    const double base = 1.0 - d * d / (8.0 * pow6(p.z_b()) * pow6(p.z_b()));
    return std::pow(base, static_cast<double>(n));
}

double photon_budget(const MediumParams& p, double x) {
    if (x == 0.0) throw std::domain_error("photon_budget: x must be nonzero");
    const double r = p.z_b() / std::abs(x);
    return 8.0 * pow6(r) * pow6(r);
}

cplx phi_integral_static(const MediumParams& p, double x, double y, double rel_tol) {
    if (x == y) return 0.0;
    const double zb = p.z_b();
    const double zb6 = pow6(zb);
    const double db = p.d_b();
    auto f = [&](double z) -> cplx {
        const double px = pow6(z - x), py = pow6(z - y);
        const cplx gx = std::exp(-db * static_attenuation(p, z, x)) / cplx(zb6, px);
        const cplx gy_c = std::exp(-db * std::conj(static_attenuation(p, z, y))) /
                          cplx(zb6, -py);
        return (py - px) * gx * gy_c;
    };
    std::vector<double> splits = {x - zb, x, x + zb, y - zb, y, y + zb};
    const cplx integral =
        gk_integrate_split(f, 0.0, p.length_L(), splits, GkOptions{rel_tol, 1e-16, 40});
    return cplx(0.0, db * pow6(zb) / zb) * integral; // i d_b z_b^5
}

cplx phi_time_integral(const MediumParams& p, const KernelTable& kern,
                       const PulseEnvelope& pulse, double x, double y) {
    if (std::abs(kern.zgrid.length - p.length_L()) > 1e-9 * p.length_L())
        throw std::invalid_argument("phi_time_integral: kernel grid does not match medium");
    if (x == y) return 0.0;
    const std::size_t ix = kern.excitation_index(x);
    const std::size_t iy = kern.excitation_index(y);
    const std::size_t nz = kern.nz(), nw = kern.nw();

    std::vector<double> h2(nw);
    for (std::size_t k = 0; k < nw; ++k)
        h2[k] = std::norm(pulse.spectrum(kern.wgrid.omegas[k]));

    // (i/c) (dw/2pi) sum_k |h~_k|^2 sum_z w_z [VK*(z,x)K(z,y) - K*(z,x)VK(z,y)]
    cplx acc = 0.0;
    for (std::size_t iz = 0; iz < nz; ++iz) {
        const cplx* kx = kern.spin_row(ix, iz);
        const cplx* ky = kern.spin_row(iy, iz);
        const cplx* vx = kern.vk_row(ix, iz);
        const cplx* vy = kern.vk_row(iy, iz);
        cplx inner = 0.0;
        for (std::size_t k = 0; k < nw; ++k) {
            inner += h2[k] * (std::conj(vx[k]) * ky[k] - std::conj(kx[k]) * vy[k]);
        }
        acc += kern.zgrid.weights[iz] * inner;
    }
    const double dw = kern.wgrid.spacing;
    return cplx(0.0, 1.0) / p.speed_c() * dw / (2.0 * M_PI) * acc;
}

std::vector<cplx> phi_pair_matrix(const MediumParams& p, const SpatialGrid& grid,
                                  const PhiMatrixOptions& opt) {
    const std::size_t n = grid.size();
    std::vector<cplx> phi(n * n, cplx(0.0, 0.0));
    auto in_band = [&](std::size_t i, std::size_t j) {
        return opt.band == 0 || (j - i) <= opt.band;
    };

    if (opt.adaptive) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (in_band(i, j)) pairs.emplace_back(i, j);
        parallel_for(pairs.size(), [&](std::size_t k) {
            const auto [i, j] = pairs[k];
            phi[i * n + j] =
                phi_integral_static(p, grid.points[i], grid.points[j], opt.rel_tol);
        });
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                phi[j * n + i] = std::conj(phi[i * n + j]);
        return phi;
    }

    // Fixed-grid path: composite Gauss-Legendre nodes sized to resolve both
    // the z_b-wide kernel features and the z_b/d_b attenuation scale.
    const double zb = p.z_b();
    const double db = p.d_b();
    const std::size_t cells_per_zb =
        std::max<std::size_t>(12, static_cast<std::size_t>(std::ceil(4.0 * db)));
    const std::size_t ncells =
        static_cast<std::size_t>(std::ceil(grid.length / zb * cells_per_zb));
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(3, 0.0, 1.0, gl_nodes, gl_weights);

    const std::size_t nn = 3 * ncells;
    std::vector<double> nodes(nn), weights(nn);
    const double hc = grid.length / static_cast<double>(ncells);
    for (std::size_t c = 0; c < ncells; ++c)
        for (std::size_t q = 0; q < 3; ++q) {
            nodes[3 * c + q] = (static_cast<double>(c) + gl_nodes[q]) * hc;
            weights[3 * c + q] = gl_weights[q] * hc;
        }

    // Per-anchor factor tables: p_a[k] = (node_k - x_a)^6,
    // g_a[k] = exp(-d_b A(node_k, x_a)) / (z_b^6 + i p_a[k]).
    const double zb6 = pow6(zb);
    std::vector<double> ptab(n * nn);
    std::vector<cplx> gtab(n * nn);
    parallel_for(n, [&](std::size_t a) {
        const double xa = grid.points[a];
        for (std::size_t k = 0; k < nn; ++k) {
            const double s6 = pow6(nodes[k] - xa);
            ptab[a * nn + k] = s6;
            gtab[a * nn + k] =
                std::exp(-db * static_attenuation(p, nodes[k], xa)) / cplx(zb6, s6);
        }
    });

    const cplx pref(0.0, db * zb6 / zb); // i d_b z_b^5
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!in_band(i, j)) continue;
            const cplx s = simd::phi_pair(nn, weights.data(), &ptab[i * nn],
                                          &ptab[j * nn], &gtab[i * nn], &gtab[j * nn]);
            phi[i * n + j] = pref * s;
        }
    });
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            phi[j * n + i] = std::conj(phi[i * n + j]);
    return phi;
}

DensityMatrixGrid identity_rescaled(const MediumParams& p, const SpatialGrid& grid,
                                    std::size_t band) {
    DensityMatrixGrid rho;
    rho.grid = grid;
    rho.rescaled = true;
    rho.photons = 0.0;
    rho.z_b = p.z_b();
    rho.band = band;
    rho.rho.assign(grid.size() * grid.size(), cplx(1.0, 0.0));
    return rho;
}

DensityMatrixGrid build_rho1(const MediumParams& p, const SpatialGrid& grid,
                             const PhiMatrixOptions& opt) {
    DensityMatrixGrid rho;
    rho.grid = grid;
    rho.rescaled = true;
    rho.photons = 1.0;
    rho.z_b = p.z_b();
    rho.band = opt.band;
    rho.rho = phi_pair_matrix(p, grid, opt);
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rho.in_band(i, j)) rho.at(i, j) += 1.0;
    return rho;
}

namespace {

// elementwise z^n by binary exponentiation over whole matrices
std::vector<cplx> elementwise_pow(std::vector<cplx> base, long n) {
    const std::size_t sz = base.size();
    std::vector<cplx> result(sz, cplx(1.0, 0.0));
    while (n > 0) {
        if (n & 1) simd::cmul(sz, result.data(), base.data(), result.data());
        n >>= 1;
        if (n) simd::cmul(sz, base.data(), base.data(), base.data());
    }
    return result;
}

} // namespace

DensityMatrixGrid rho_fock(const DensityMatrixGrid& rho0,
                           const std::vector<cplx>& phi_int, long n) {
    if (n < 0) throw std::invalid_argument("rho_fock: photon number must be >= 0");
    const std::size_t sz = rho0.size();
    if (phi_int.size() != sz * sz)
        throw std::invalid_argument("rho_fock: phi matrix does not match grid");

    DensityMatrixGrid out = rho0;
    out.photons = rho0.photons + static_cast<double>(n);
    if (n == 0) return out;

    std::vector<cplx> fac(phi_int.size());
    for (std::size_t k = 0; k < fac.size(); ++k) fac[k] = 1.0 + phi_int[k];
    std::vector<cplx> powed = elementwise_pow(std::move(fac), n);
    simd::cmul(out.rho.size(), powed.data(), rho0.rho.data(), out.rho.data());
    // the diagonal is conserved exactly; pin it against rounding drift
    for (std::size_t i = 0; i < sz; ++i) out.at(i, i) = rho0.at(i, i);
    return out;
}

DensityMatrixGrid rho_coherent(const DensityMatrixGrid& rho1_rescaled, double alpha) {
    if (!rho1_rescaled.rescaled)
        throw std::invalid_argument("rho_coherent: input must be the rescaled n=1 matrix");
    DensityMatrixGrid out = rho1_rescaled;
    out.coherent = true;
    out.photons = alpha * alpha;
    const double a2 = alpha * alpha;
    for (auto& v : out.rho) v = std::exp(a2 * (v - 1.0));
    return out;
}

double diagonal_width(const DensityMatrixGrid& rho, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("diagonal_width: threshold must lie in (0, 1)");
    if (!(rho.z_b > 0.0))
        throw std::invalid_argument("diagonal_width: matrix carries no blockade scale");
    const auto& g = rho.grid;
    const std::size_t n = g.size();
    const double h = g.spacing();
    const double zb = rho.z_b;

    // anchors every ~z_b/2 inside [2 z_b, L - z_b]
    const std::size_t stride =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(0.5 * zb / h)));
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i0 = 0; i0 < n; i0 += stride) {
        const double x0 = g.points[i0];
        if (x0 < 2.0 * zb || x0 > g.length - zb) continue;
        double prev = std::abs(rho.at(i0, i0));
        bool found = false;
        for (std::size_t j = 1; j <= i0 && i0 + j < n; ++j) {
            if (!rho.in_band(i0 - j, i0 + j)) break;
            double v = std::abs(rho.at(i0 + j, i0 - j));
            if (v < threshold) {
                v = std::max(v, 1e-300);
                const double frac = (std::log(prev) - std::log(threshold)) /
                                    (std::log(prev) - std::log(v));
                sum += std::sqrt(2.0) * h * (static_cast<double>(j) - 1.0 + frac);
                ++count;
                found = true;
                break;
            }
            prev = v;
        }
        if (!found)
            throw NumericalConsistencyError(
                "diagonal_width: coherence feature wider than the sampled grid");
    }
    if (count == 0)
        throw std::invalid_argument("diagonal_width: no anchors inside [2 z_b, L - z_b]");
    return sum / static_cast<double>(count);
}

void export_heatmap_csv(const DensityMatrixGrid& rho, const MediumParams& p,
                        const std::string& path,
                        const std::vector<std::string>& comments,
                        bool json_mirror) {
    CsvWriter csv(path, json_mirror);
    for (const auto& c : comments) csv.comment(c);
    csv.header({"x_over_zb", "y_over_zb", "abs", "re", "im"});
    const std::size_t n = rho.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!rho.in_band(i, j)) continue;
            const cplx v = rho.at(i, j);
            csv.row({rho.grid.points[i] / p.z_b(), rho.grid.points[j] / p.z_b(),
                     std::abs(v), v.real(), v.imag()});
        }
}

} // namespace switchsim
