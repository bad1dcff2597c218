// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
//
// Versioned binary cache for kernel tables: fixed header, then the payload
// arrays row-major as complex64 (float32 re/im pairs).
#include <cstdint>
#include <cstring>
#include <fstream>

#include "switchsim/kernels.hpp"

namespace switchsim {

namespace {

constexpr char kMagic[4] = {'S', 'W', 'K', 'T'};
constexpr std::uint32_t kVersion = 1;

void fnv1a(std::uint64_t& h, const void* data, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= b[i];
        h *= 0x100000001b3ULL;
    }
}

void fnv1a_doubles(std::uint64_t& h, const double* d, std::size_t n) {
    fnv1a(h, d, n * sizeof(double));
}

void write_c64(std::ofstream& os, const std::vector<cplx>& v) {
    std::vector<float> buf(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        buf[2 * i] = static_cast<float>(v[i].real());
        buf[2 * i + 1] = static_cast<float>(v[i].imag());
    }
    os.write(reinterpret_cast<const char*>(buf.data()),
             static_cast<std::streamsize>(buf.size() * sizeof(float)));
}

bool read_c64(std::ifstream& is, std::vector<cplx>& v, std::size_t n) {
    std::vector<float> buf(2 * n);
    is.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
    if (!is) return false;
    v.resize(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = cplx(buf[2 * i], buf[2 * i + 1]);
    return true;
}

} // namespace

std::uint64_t kernel_table_key(const MediumParams& p, const SpatialGrid& zgrid,
                               const FrequencyGrid& wgrid,
                               const std::vector<double>& excitations) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const double prim[6] = {p.gamma(), p.omega_ctrl(), p.coupling_G(),
                            p.c6(), p.length_L(), p.speed_c()};
    fnv1a_doubles(h, prim, 6);
    fnv1a_doubles(h, zgrid.points.data(), zgrid.points.size());
    fnv1a_doubles(h, wgrid.omegas.data(), wgrid.omegas.size());
    fnv1a_doubles(h, excitations.data(), excitations.size());
    return h;
}

void save_kernel_table(const KernelTable& t, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open cache file for writing: " + path);
    os.write(kMagic, 4);
    const std::uint32_t ver = kVersion;
    os.write(reinterpret_cast<const char*>(&ver), sizeof(ver));
    const std::uint64_t key =
        kernel_table_key(t.params, t.zgrid, t.wgrid, t.excitations);
    os.write(reinterpret_cast<const char*>(&key), sizeof(key));
    const std::uint64_t dims[3] = {t.nx(), t.nz(), t.nw()};
    os.write(reinterpret_cast<const char*>(dims), sizeof(dims));
    write_c64(os, t.e0);
    write_c64(os, t.spin_k);
    write_c64(os, t.spin_vk);
    write_c64(os, t.field_k);
}

std::optional<KernelTable> load_kernel_table(const std::string& path,
                                             const MediumParams& p,
                                             const SpatialGrid& zgrid,
                                             const FrequencyGrid& wgrid,
                                             const std::vector<double>& excitations) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;
    char magic[4];
    std::uint32_t ver = 0;
    std::uint64_t key = 0, dims[3] = {0, 0, 0};
    is.read(magic, 4);
    is.read(reinterpret_cast<char*>(&ver), sizeof(ver));
    is.read(reinterpret_cast<char*>(&key), sizeof(key));
    is.read(reinterpret_cast<char*>(dims), sizeof(dims));
    if (!is || std::memcmp(magic, kMagic, 4) != 0 || ver != kVersion)
        return std::nullopt;
    if (key != kernel_table_key(p, zgrid, wgrid, excitations))
        return std::nullopt;
    if (dims[0] != excitations.size() || dims[1] != zgrid.size() ||
        dims[2] != wgrid.size())
        return std::nullopt;

    KernelTable t;
    t.params = p;
    t.zgrid = zgrid;
    t.wgrid = wgrid;
    t.excitations = excitations;
    const std::size_t nzw = dims[1] * dims[2];
    if (!read_c64(is, t.e0, nzw)) return std::nullopt;
    if (!read_c64(is, t.spin_k, dims[0] * nzw)) return std::nullopt;
    if (!read_c64(is, t.spin_vk, dims[0] * nzw)) return std::nullopt;
    if (!read_c64(is, t.field_k, dims[0] * nzw)) return std::nullopt;
    return t;
}

} // namespace switchsim
