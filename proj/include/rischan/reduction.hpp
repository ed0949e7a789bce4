// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rischan/channel.hpp"
#include "rischan/interaction.hpp"

namespace rischan {

// Schur complement over the primary dipoles:
//   R = W_PP - W_PPbar * W_PbarPbar^{-1} * W_PbarP
// Its inverse's RT block is the channel. r_inv is cached at construction so
// low-rank updates can slice it directly.
struct ReducedSystem {
    Matrix r;     // p x p
    Matrix r_inv; // p x p
    IndexMap map;
    double f_ghz = 0.0;
    RisConfiguration cfg;
};

// Cached eigendecomposition products for diagonal-shift updates:
//   Sigma = W_PPbar * Q,  Psi = Q^{-1} * W_PbarP,  d = eig(W_PbarPbar).
// Q itself is consumed during precompute and not retained; nothing s x s
// survives construction.
struct EigenPrecompute {
    Matrix sigma; // p x s
    Matrix psi;   // s x p
    Vector d;     // s eigenvalues
    Matrix w_pp;  // p x p snapshot
    IndexMap map;
    double f_ghz = 0.0;
    RisConfiguration cfg;

    // Dimensions of every retained dense object, for the memory contract.
    std::vector<std::pair<Eigen::Index, Eigen::Index>> retained_shapes() const {
        return {{sigma.rows(), sigma.cols()},
                {psi.rows(), psi.cols()},
                {d.size(), 1},
                {w_pp.rows(), w_pp.cols()}};
    }
};

// Builds R via an LU factorization of W_PbarPbar and a multi-RHS solve
// against W_PbarP; W_PbarPbar^{-1} is never formed explicitly.
ReducedSystem reduce(const InteractionMatrix& wm);

// H = [R^{-1}]_RT, computed by solving R X = E_T and slicing the R rows.
ChannelMatrix channel_from_reduced(const ReducedSystem& rs);

// Slice the RT block out of an explicitly known p x p R^{-1}.
Matrix rt_block(const Matrix& r_inv, const IndexMap& map);

EigenPrecompute eigen_precompute(const InteractionMatrix& wm);

// R_lambda^{-1} = (W_PP - Sigma * diag(1/(d_k - lambda)) * Psi)^{-1}.
// Cost per call: O(s p) scaling pass, O(s p^2) product, O(p^3) inversion.
Matrix shifted_reduce(const EigenPrecompute& pre, cdouble lambda);

} // namespace rischan
