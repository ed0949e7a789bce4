// SPDX-License-Identifier: Apache-2.0
#include "rischan/reduction.hpp"

#include <sstream>

#include <Eigen/Eigenvalues>

namespace rischan {

ReducedSystem reduce(const InteractionMatrix& wm) {
    const IndexMap& m = wm.map;
    const int p = m.p();
    const int s = m.s();

    Matrix r;
    if (s == 0) {
        r = wm.w;
    } else {
        const auto w_pp = wm.w.topLeftCorner(p, p);
        const auto w_ps = wm.w.topRightCorner(p, s);
        const auto w_sp = wm.w.bottomLeftCorner(s, p);
        Eigen::PartialPivLU<Matrix> lu(wm.w.bottomRightCorner(s, s));
        const double rc = lu.rcond();
        if (rc <= 1e-13) {
            std::ostringstream os;
            os << "reduce: secondary block near-singular, rcond=" << rc;
            throw ConditioningError(os.str(), rc);
        }
        r = w_pp - w_ps * lu.solve(w_sp);
    }

    Eigen::PartialPivLU<Matrix> rlu(r);
    if (rlu.rcond() <= 1e-13)
        throw ConditioningError("reduce: reduced system near-singular", rlu.rcond());
    Matrix r_inv = rlu.solve(Matrix::Identity(p, p));
    return {std::move(r), std::move(r_inv), m, wm.f_ghz, wm.cfg};
}

ChannelMatrix channel_from_reduced(const ReducedSystem& rs) {
    const IndexMap& m = rs.map;
    Matrix rhs = Matrix::Zero(m.p(), m.n_tx);
    for (int t = 0; t < m.n_tx; ++t) rhs(m.offset(Group::T) + t, t) = 1.0;

    Eigen::PartialPivLU<Matrix> lu(rs.r);
    if (lu.rcond() <= 1e-13)
        throw ConditioningError("channel_from_reduced: singular reduced system", lu.rcond());
    Matrix x = lu.solve(rhs);
    return {x.middleRows(m.offset(Group::R), m.n_rx), rs.f_ghz, rs.cfg};
}

Matrix rt_block(const Matrix& r_inv, const IndexMap& map) {
    return r_inv.block(map.offset(Group::R), map.offset(Group::T),
                       map.n_rx, map.n_tx);
}

EigenPrecompute eigen_precompute(const InteractionMatrix& wm) {
    const IndexMap& m = wm.map;
    const int p = m.p();
    const int s = m.s();
    if (s < 1)
        throw DomainError("eigen_precompute: requires at least one secondary dipole");

    Eigen::ComplexEigenSolver<Matrix> es(wm.w.bottomRightCorner(s, s), true);
    if (es.info() != Eigen::Success)
        throw DiagonalizationError("eigen_precompute: eigendecomposition failed");

    const Matrix& q = es.eigenvectors();
    Eigen::PartialPivLU<Matrix> qlu(q);
    if (qlu.rcond() <= 1e-12)
        throw DiagonalizationError("eigen_precompute: eigenvector basis ill-conditioned");

    EigenPrecompute pre;
    pre.sigma = wm.w.topRightCorner(p, s) * q;
    pre.psi = qlu.solve(wm.w.bottomLeftCorner(s, p));
    pre.d = es.eigenvalues();
    pre.w_pp = wm.w.topLeftCorner(p, p);
    pre.map = m;
    pre.f_ghz = wm.f_ghz;
    pre.cfg = wm.cfg;
    return pre;
}

Matrix shifted_reduce(const EigenPrecompute& pre, cdouble lambda) {
    const int s = static_cast<int>(pre.d.size());
    const double dmax = pre.d.cwiseAbs().maxCoeff();
    for (int k = 0; k < s; ++k) {
        if (std::abs(pre.d[k] - lambda) <= 1e-12 * dmax) {
            std::ostringstream os;
            os << "shifted_reduce: shift (" << lambda.real() << "," << lambda.imag()
               << ") collides with eigenvalue " << k;
            throw ResonanceError(os.str(), k);
        }
    }

    // diag(1/(d_k - lambda)) applied as a row scaling of Psi
    Matrix psi_scaled = pre.psi;
    for (int k = 0; k < s; ++k)
        psi_scaled.row(k) *= 1.0 / (pre.d[k] - lambda);

    Matrix r_lambda = pre.w_pp - pre.sigma * psi_scaled;
    Eigen::PartialPivLU<Matrix> lu(r_lambda);
    if (lu.rcond() <= 1e-13)
        throw ConditioningError("shifted_reduce: shifted system near-singular", lu.rcond());
    return lu.solve(Matrix::Identity(r_lambda.rows(), r_lambda.cols()));
}

} // namespace rischan
