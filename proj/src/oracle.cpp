// SPDX-License-Identifier: Apache-2.0
#include "rischan/oracle.hpp"

#include <iostream>

namespace rischan {

ChannelMatrix channel_full(const InteractionMatrix& wm) {
    const IndexMap& m = wm.map;
    const int n = m.n();

    Eigen::PartialPivLU<Matrix> lu(wm.w);
    const double rc = lu.rcond();
    if (rc <= 1e-13)
        throw ConditioningError("channel_full: interaction matrix near-singular", rc);
    if (rc <= 1e-10)
        std::cerr << "channel_full: warning, poorly conditioned interaction matrix"
                  << " (rcond=" << rc << ")\n";

    Matrix rhs = Matrix::Zero(n, m.n_tx);
    for (int t = 0; t < m.n_tx; ++t) rhs(m.offset(Group::T) + t, t) = 1.0;
    Matrix x = lu.solve(rhs);
    return {x.middleRows(m.offset(Group::R), m.n_rx), wm.f_ghz, wm.cfg};
}

ChannelDiff compare_channels(const ChannelMatrix& a, const ChannelMatrix& b) {
    if (a.h.rows() != b.h.rows() || a.h.cols() != b.h.cols())
        throw DomainError("compare_channels: shape mismatch");
    ChannelDiff d;
    const double na = a.h.norm();
    const double nd = (a.h - b.h).norm();
    d.rel_frobenius = (na == 0.0 && nd == 0.0) ? 0.0 : nd / na;
    d.max_abs = a.h.size() == 0 ? 0.0 : (a.h - b.h).cwiseAbs().maxCoeff();
    return d;
}

} // namespace rischan
