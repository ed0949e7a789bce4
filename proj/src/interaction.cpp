// SPDX-License-Identifier: Apache-2.0
#include "rischan/interaction.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace rischan {

InteractionMatrix assemble(const Scenario& sc, const IndexMap& map, double f_ghz,
                           const RisConfiguration& cfg) {
    const auto dipoles = canonical_dipoles(sc, map);
    const int n = map.n();
    const Wavenumber k = Wavenumber::from_frequency_ghz(f_ghz);

    Matrix w(n, n);
    for (int i = 0; i < n; ++i) {
        w(i, i) = inverse_polarizability(f_ghz, dipoles[static_cast<size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            const cdouble g = green_function(dipoles[static_cast<size_t>(i)].position(),
                                             dipoles[static_cast<size_t>(j)].position(), k);
            w(i, j) = -g;
            w(j, i) = -g;
        }
    }

    const Vector c = configuration_to_inverse_polarizabilities(sc, cfg, f_ghz);
    const int s0 = map.offset(Group::S);
    for (int kk = 0; kk < map.n_ris; ++kk) w(s0 + kk, s0 + kk) = c[kk];

    return {std::move(w), map, f_ghz, cfg};
}

Matrix block(const InteractionMatrix& wm, Group rows, Group cols) {
    const IndexMap& m = wm.map;
    return wm.w.block(m.offset(rows), m.offset(cols), m.count(rows), m.count(cols));
}

InteractionMatrix set_ris_diagonal(const InteractionMatrix& wm, const Vector& c) {
    if (c.size() != wm.map.n_ris)
        throw DomainError("set_ris_diagonal: length does not match number of RIS elements");
    InteractionMatrix out = wm;
    const int s0 = out.map.offset(Group::S);
    for (int k = 0; k < out.map.n_ris; ++k) out.w(s0 + k, s0 + k) = c[k];
    out.cfg = RisConfiguration::from_analog(c);
    return out;
}

void dump_interaction_matrix(const InteractionMatrix& wm, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("dump_interaction_matrix: cannot open " + path);
    const char magic[4] = {'R', 'I', 'S', 'W'};
    const uint32_t n = static_cast<uint32_t>(wm.map.n());
    const uint32_t reserved[2] = {0, 0};
    out.write(magic, 4);
    out.write(reinterpret_cast<const char*>(&n), 4);
    out.write(reinterpret_cast<const char*>(reserved), 8);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            const double re = wm.w(i, j).real();
            const double im = wm.w(i, j).imag();
            out.write(reinterpret_cast<const char*>(&re), 8);
            out.write(reinterpret_cast<const char*>(&im), 8);
        }
}

Matrix read_interaction_matrix_dump(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("read_interaction_matrix_dump: cannot open " + path);
    char magic[4];
    uint32_t n = 0, reserved[2];
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&n), 4);
    in.read(reinterpret_cast<char*>(reserved), 8);
    if (!in || std::memcmp(magic, "RISW", 4) != 0)
        throw DomainError("read_interaction_matrix_dump: bad header");
    Matrix w(n, n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            double re, im;
            in.read(reinterpret_cast<char*>(&re), 8);
            in.read(reinterpret_cast<char*>(&im), 8);
            w(i, j) = {re, im};
        }
    if (!in) throw DomainError("read_interaction_matrix_dump: truncated file");
    return w;
}

} // namespace rischan
