// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rischan/channel.hpp"
#include "rischan/reduction.hpp"

namespace rischan {

// Diagonal change of m RIS elements: element indices (0-based within the S
// group, strictly increasing) and the inverse-polarizability deltas.
struct RisDelta {
    std::vector<int> indices;
    std::vector<cdouble> delta_alpha_inv;

    int m() const { return static_cast<int>(indices.size()); }
};

// Delta between two configurations at operating frequency f.
RisDelta ris_delta_between(const Scenario& sc, const RisConfiguration& from,
                           const RisConfiguration& to, double f_ghz);

// Rank-m Woodbury update of a cached full inverse. Selectors are applied as
// row/column gathers; the inner m x m system is solved, not inverted.
Matrix woodbury_full(const Matrix& w_inv, const IndexMap& map, const RisDelta& delta);

// RT block of (R + UCV)^{-1} from a cached p x p R^{-1}.
Matrix woodbury_reduced_rt(const Matrix& r_inv, const IndexMap& map, const RisDelta& delta);

ChannelMatrix woodbury_reduced_channel(const ReducedSystem& rs, const RisDelta& delta);

// 1-bit planning: pick whichever of the two complementary cached baselines is
// closer in Hamming distance to the target, so m <= floor(N_S / 2).
struct OneBitPlan {
    bool use_complement = false;
    RisDelta delta; // relative to the chosen baseline
};

OneBitPlan one_bit_plan(const Scenario& sc, const std::vector<int>& baseline_bits,
                        const std::vector<int>& target_bits, double f_ghz);

// Move of one dipole: rank-2 change of W (row j and column j, diagonal
// untouched). delta_w holds the changes of row j, with delta_w[j] = 0.
struct DisplacementDelta {
    int dipole_index = 0;
    Position new_position;
    Vector delta_w; // length N
};

// Computes the row delta for moving dipole j of `dipoles` to new_pos.
DisplacementDelta make_displacement(const std::vector<DipoleParams>& dipoles, int j,
                                    Position new_pos, double f_ghz);

// Canonical-basis rank-2 Woodbury update of W^{-1}; works for any dipole.
Matrix displace_full(const Matrix& w_inv, const DisplacementDelta& delta);

// Precomputed Sigma-rows, Psi-columns, and W_PP rows for K candidate
// positions of one mobile primary dipole. The Sigma-row and Psi-column of a
// position are independent quantities; only the raw W rows/columns they are
// derived from are transposes of each other.
struct TrajectoryCache {
    int primary_index = 0; // global canonical index, must lie in P
    std::vector<Position> positions;
    Matrix sigma_rows; // K x s
    Matrix psi_cols;   // s x K
    Matrix wpp_rows;   // K x p, own-column entry kept zero (diagonal unchanged)

    int n_positions() const { return static_cast<int>(positions.size()); }
};

// Builds the cache against the secondary block of wm. The candidate positions
// are checked for collisions with every non-moving dipole.
TrajectoryCache build_trajectory_cache(const Scenario& sc, const InteractionMatrix& wm,
                                       int primary_index,
                                       const std::vector<Position>& positions);

// R_lambda^{-1} with the mover's Sigma-row, Psi-column, and W_PP row/column
// substituted from the cache.
Matrix displace_reduced(const EigenPrecompute& pre, const TrajectoryCache& cache,
                        int position_index, cdouble lambda = 0.0);

// Uncached single-position path: builds a one-entry cache through the same
// code and evaluates it, so results are bit-identical to the cached path.
Matrix displace_reduced_uncached(const Scenario& sc, const InteractionMatrix& wm,
                                 const EigenPrecompute& pre, int primary_index,
                                 Position new_pos, cdouble lambda = 0.0);

struct Move {
    const TrajectoryCache* cache = nullptr;
    int position_index = 0;
};

// Simultaneous displacement of several primary dipoles. Per-mover rows and
// columns come from the caches; mover-mover couplings are recomputed fresh.
Matrix displace_multi_reduced(const EigenPrecompute& pre, const std::vector<Move>& moves,
                              cdouble lambda = 0.0);

// Shift + displacements through the eigen path, then the RIS delta through
// the reduced Woodbury update; returns the resulting channel.
ChannelMatrix combined_update(const EigenPrecompute& pre, cdouble lambda,
                              const std::vector<Move>& moves, const RisDelta& ris_delta);

} // namespace rischan
