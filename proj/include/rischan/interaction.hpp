// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "rischan/scenario.hpp"

namespace rischan {

// Dense N x N interaction matrix: inverse polarizabilities on the diagonal,
// negated Green's functions off-diagonal. Symmetric by construction (each
// off-diagonal pair is computed once).
struct InteractionMatrix {
    Matrix w;
    IndexMap map;
    double f_ghz = 0.0;
    RisConfiguration cfg;
};

InteractionMatrix assemble(const Scenario& sc, const IndexMap& map, double f_ghz,
                           const RisConfiguration& cfg);

// Contiguous block copy for one of the canonical groups.
Matrix block(const InteractionMatrix& wm, Group rows, Group cols);

// New matrix identical to the input except diag(W_SS) = c.
InteractionMatrix set_ris_diagonal(const InteractionMatrix& wm, const Vector& c);

// Debug dump: 16-byte header (magic "RISW", u32 N, u32 reserved), then
// row-major interleaved re/im little-endian doubles.
void dump_interaction_matrix(const InteractionMatrix& wm, const std::string& path);
Matrix read_interaction_matrix_dump(const std::string& path);

} // namespace rischan
