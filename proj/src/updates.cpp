// SPDX-License-Identifier: Apache-2.0
#include "rischan/updates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rischan {

namespace {

// Drops zero deltas and maps element indices to the requested basis offset.
struct GatheredDelta {
    std::vector<int> rows; // indices in the target basis
    std::vector<cdouble> values;
};

GatheredDelta gather(const RisDelta& delta, int s_offset, int limit) {
    GatheredDelta g;
    int prev = -1;
    for (size_t k = 0; k < delta.indices.size(); ++k) {
        const int idx = delta.indices[k];
        if (idx <= prev) throw DomainError("RisDelta: indices must be strictly increasing");
        prev = idx;
        const cdouble dv = delta.delta_alpha_inv.at(k);
        if (!std::isfinite(dv.real()) || !std::isfinite(dv.imag()))
            throw DomainError("RisDelta: non-finite delta");
        if (dv == cdouble(0.0, 0.0)) continue; // C must stay invertible
        const int row = s_offset + idx;
        if (row < 0 || row >= limit) throw DomainError("RisDelta: index out of range");
        g.rows.push_back(row);
        g.values.push_back(dv);
    }
    return g;
}

// Shared Woodbury core on an explicit cached inverse `a_inv`:
//   (A + UCV)^{-1} = A^{-1} - A^{-1}U (C^{-1} + V A^{-1} U)^{-1} V A^{-1}
// with U/V realized as column/row gathers of a_inv.
Matrix woodbury_diag_update(const Matrix& a_inv, const GatheredDelta& g) {
    const int m = static_cast<int>(g.rows.size());
    if (m == 0) return a_inv;
    const Eigen::Index n = a_inv.rows();

    Matrix cols(n, m), rows(m, n), inner(m, m);
    for (int k = 0; k < m; ++k) {
        cols.col(k) = a_inv.col(g.rows[static_cast<size_t>(k)]);
        rows.row(k) = a_inv.row(g.rows[static_cast<size_t>(k)]);
    }
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            inner(k, l) = a_inv(g.rows[static_cast<size_t>(k)], g.rows[static_cast<size_t>(l)]);
    for (int k = 0; k < m; ++k) inner(k, k) += 1.0 / g.values[static_cast<size_t>(k)];

    Eigen::PartialPivLU<Matrix> lu(inner);
    if (lu.rcond() <= 1e-14)
        throw UpdateSingularityError("woodbury update: singular inner matrix");
    return a_inv - cols * lu.solve(rows);
}

} // namespace

RisDelta ris_delta_between(const Scenario& sc, const RisConfiguration& from,
                           const RisConfiguration& to, double f_ghz) {
    const Vector a = configuration_to_inverse_polarizabilities(sc, from, f_ghz);
    const Vector b = configuration_to_inverse_polarizabilities(sc, to, f_ghz);
    RisDelta d;
    for (int k = 0; k < sc.n_ris(); ++k) {
        if (a[k] == b[k]) continue;
        d.indices.push_back(k);
        d.delta_alpha_inv.push_back(b[k] - a[k]);
    }
    return d;
}

Matrix woodbury_full(const Matrix& w_inv, const IndexMap& map, const RisDelta& delta) {
    return woodbury_diag_update(w_inv, gather(delta, map.offset(Group::S), map.n()));
}

Matrix woodbury_reduced_rt(const Matrix& r_inv, const IndexMap& map, const RisDelta& delta) {
    const GatheredDelta g = gather(delta, map.offset(Group::S), map.p());
    const int m = static_cast<int>(g.rows.size());
    if (m == 0) return rt_block(r_inv, map);

    const int r0 = map.offset(Group::R);
    const int t0 = map.offset(Group::T);
    Matrix cols_r(map.n_rx, m), rows_t(m, map.n_tx), inner(m, m);
    for (int k = 0; k < m; ++k) {
        cols_r.col(k) = r_inv.block(r0, g.rows[static_cast<size_t>(k)], map.n_rx, 1);
        rows_t.row(k) = r_inv.block(g.rows[static_cast<size_t>(k)], t0, 1, map.n_tx);
    }
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            inner(k, l) = r_inv(g.rows[static_cast<size_t>(k)], g.rows[static_cast<size_t>(l)]);
    for (int k = 0; k < m; ++k) inner(k, k) += 1.0 / g.values[static_cast<size_t>(k)];

    Eigen::PartialPivLU<Matrix> lu(inner);
    if (lu.rcond() <= 1e-14)
        throw UpdateSingularityError("woodbury_reduced: singular inner matrix");
    return rt_block(r_inv, map) - cols_r * lu.solve(rows_t);
}

ChannelMatrix woodbury_reduced_channel(const ReducedSystem& rs, const RisDelta& delta) {
    return {woodbury_reduced_rt(rs.r_inv, rs.map, delta), rs.f_ghz, rs.cfg};
}

OneBitPlan one_bit_plan(const Scenario& sc, const std::vector<int>& baseline_bits,
                        const std::vector<int>& target_bits, double f_ghz) {
    const size_t ns = static_cast<size_t>(sc.n_ris());
    if (baseline_bits.size() != ns || target_bits.size() != ns)
        throw DomainError("one_bit_plan: bit vector length mismatch");

    int dist = 0;
    for (size_t k = 0; k < ns; ++k)
        if (baseline_bits[k] != target_bits[k]) ++dist;

    OneBitPlan plan;
    plan.use_complement = dist > static_cast<int>(ns) - dist;

    std::vector<int> chosen(ns);
    for (size_t k = 0; k < ns; ++k)
        chosen[k] = plan.use_complement ? 1 - baseline_bits[k] : baseline_bits[k];
    plan.delta = ris_delta_between(sc, RisConfiguration::from_bits(chosen),
                                   RisConfiguration::from_bits(target_bits), f_ghz);
    return plan;
}

DisplacementDelta make_displacement(const std::vector<DipoleParams>& dipoles, int j,
                                    Position new_pos, double f_ghz) {
    const int n = static_cast<int>(dipoles.size());
    if (j < 0 || j >= n) throw DomainError("make_displacement: dipole index out of range");
    const Wavenumber k = Wavenumber::from_frequency_ghz(f_ghz);

    DisplacementDelta d;
    d.dipole_index = j;
    d.new_position = new_pos;
    d.delta_w = Vector::Zero(n);
    const Position old_pos = dipoles[static_cast<size_t>(j)].position();
    for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        const Position other = dipoles[static_cast<size_t>(i)].position();
        if (other.x == new_pos.x && other.y == new_pos.y)
            throw SingularGeometryError("make_displacement: new position collides with dipole "
                                        + std::to_string(i));
        d.delta_w[i] = -green_function(new_pos, other, k) + green_function(old_pos, other, k);
    }
    return d;
}

Matrix displace_full(const Matrix& w_inv, const DisplacementDelta& delta) {
    const Eigen::Index n = w_inv.rows();
    if (delta.delta_w.size() != n) throw DomainError("displace_full: size mismatch");
    const int j = delta.dipole_index;
    if (delta.delta_w[j] != cdouble(0.0, 0.0))
        throw DomainError("displace_full: diagonal delta must be zero");
    if (delta.delta_w.isZero(0.0)) return w_inv;

    // Rank-2 update W + d e_j^T + e_j d^T with C = I2, U = [d e_j], V = [e_j^T; d^T]
    const Vector& d = delta.delta_w;
    Vector a1 = w_inv * d;
    Vector a2 = w_inv.col(j);
    Eigen::RowVectorXcd b1 = w_inv.row(j);
    Eigen::RowVectorXcd b2 = d.transpose() * w_inv;

    Matrix inner(2, 2);
    inner(0, 0) = 1.0 + (b1 * d)(0); // e_j^T W^{-1} d
    inner(0, 1) = w_inv(j, j);
    inner(1, 0) = (b2 * d)(0);
    inner(1, 1) = 1.0 + b2(j);

    const cdouble det = inner(0, 0) * inner(1, 1) - inner(0, 1) * inner(1, 0);
    const double scale = inner.cwiseAbs().maxCoeff();
    if (std::abs(det) <= 1e-14 * scale * scale)
        throw UpdateSingularityError("displace_full: singular 2x2 inner matrix");
    Matrix inner_inv(2, 2);
    inner_inv << inner(1, 1) / det, -inner(0, 1) / det,
                 -inner(1, 0) / det, inner(0, 0) / det;

    Matrix u(n, 2), v(2, n);
    u.col(0) = a1;
    u.col(1) = a2;
    v.row(0) = b1;
    v.row(1) = b2;
    return w_inv - u * inner_inv * v;
}

TrajectoryCache build_trajectory_cache(const Scenario& sc, const InteractionMatrix& wm,
                                       int primary_index,
                                       const std::vector<Position>& positions) {
    const IndexMap& m = wm.map;
    const int p = m.p();
    const int s = m.s();
    if (primary_index < 0 || primary_index >= p)
        throw DomainError("build_trajectory_cache: displaced dipole must be a primary dipole");
    if (s < 1)
        throw DomainError("build_trajectory_cache: no secondary dipoles");

    const auto dipoles = canonical_dipoles(sc, m);
    const Wavenumber k = Wavenumber::from_frequency_ghz(wm.f_ghz);
    const int kpos = static_cast<int>(positions.size());

    Eigen::ComplexEigenSolver<Matrix> es(wm.w.bottomRightCorner(s, s), true);
    if (es.info() != Eigen::Success)
        throw DiagonalizationError("build_trajectory_cache: eigendecomposition failed");
    const Matrix& q = es.eigenvectors();
    Eigen::PartialPivLU<Matrix> qlu(q);
    if (qlu.rcond() <= 1e-12)
        throw DiagonalizationError("build_trajectory_cache: eigenvector basis ill-conditioned");

    TrajectoryCache cache;
    cache.primary_index = primary_index;
    cache.positions = positions;
    cache.sigma_rows.resize(kpos, s);
    cache.psi_cols.resize(s, kpos);
    cache.wpp_rows = Matrix::Zero(kpos, p);

    for (int kk = 0; kk < kpos; ++kk) {
        const Position pos = positions[static_cast<size_t>(kk)];
        for (int i = 0; i < m.n(); ++i) {
            if (i == primary_index) continue;
            const Position other = dipoles[static_cast<size_t>(i)].position();
            if (other.x == pos.x && other.y == pos.y)
                throw SingularGeometryError("trajectory position " + std::to_string(kk)
                                            + " collides with dipole " + std::to_string(i));
        }
        Eigen::RowVectorXcd w_pe(s);
        for (int i = 0; i < s; ++i)
            w_pe(i) = -green_function(pos, dipoles[static_cast<size_t>(p + i)].position(), k);
        cache.sigma_rows.row(kk) = w_pe * q;
        cache.psi_cols.col(kk) = qlu.solve(w_pe.transpose());
        for (int i = 0; i < p; ++i) {
            if (i == primary_index) continue;
            cache.wpp_rows(kk, i) =
                -green_function(pos, dipoles[static_cast<size_t>(i)].position(), k);
        }
    }
    return cache;
}

namespace {

Matrix invert_substituted(const EigenPrecompute& pre, const Matrix& w_pp,
                          const Matrix& sigma, const Matrix& psi, cdouble lambda) {
    const int s = static_cast<int>(pre.d.size());
    const double dmax = pre.d.cwiseAbs().maxCoeff();
    for (int k = 0; k < s; ++k)
        if (std::abs(pre.d[k] - lambda) <= 1e-12 * dmax)
            throw ResonanceError("displacement update: shift collides with eigenvalue "
                                 + std::to_string(k), k);

    Matrix psi_scaled = psi;
    for (int k = 0; k < s; ++k)
        psi_scaled.row(k) *= 1.0 / (pre.d[k] - lambda);
    Matrix r = w_pp - sigma * psi_scaled;
    Eigen::PartialPivLU<Matrix> lu(r);
    if (lu.rcond() <= 1e-13)
        throw ConditioningError("displacement update: reduced system near-singular", lu.rcond());
    return lu.solve(Matrix::Identity(r.rows(), r.cols()));
}

} // namespace

Matrix displace_reduced(const EigenPrecompute& pre, const TrajectoryCache& cache,
                        int position_index, cdouble lambda) {
    return displace_multi_reduced(pre, {Move{&cache, position_index}}, lambda);
}

Matrix displace_reduced_uncached(const Scenario& sc, const InteractionMatrix& wm,
                                 const EigenPrecompute& pre, int primary_index,
                                 Position new_pos, cdouble lambda) {
    const TrajectoryCache cache =
        build_trajectory_cache(sc, wm, primary_index, {new_pos});
    return displace_reduced(pre, cache, 0, lambda);
}

Matrix displace_multi_reduced(const EigenPrecompute& pre, const std::vector<Move>& moves,
                              cdouble lambda) {
    const int p = static_cast<int>(pre.w_pp.rows());
    Matrix w_pp = pre.w_pp;
    Matrix sigma = pre.sigma;
    Matrix psi = pre.psi;

    std::vector<int> mover_of(static_cast<size_t>(p), -1);
    for (size_t a = 0; a < moves.size(); ++a) {
        const Move& mv = moves[a];
        if (mv.cache == nullptr) throw DomainError("displace_multi_reduced: null cache");
        if (mv.position_index < 0 || mv.position_index >= mv.cache->n_positions())
            throw DomainError("displace_multi_reduced: position index out of range");
        const int q = mv.cache->primary_index;
        if (q < 0 || q >= p)
            throw DomainError("displace_multi_reduced: displaced dipole must be primary");
        if (mover_of[static_cast<size_t>(q)] != -1)
            throw DomainError("displace_multi_reduced: duplicate mover");
        mover_of[static_cast<size_t>(q)] = static_cast<int>(a);

        sigma.row(q) = mv.cache->sigma_rows.row(mv.position_index);
        psi.col(q) = mv.cache->psi_cols.col(mv.position_index);
        const cdouble diag = w_pp(q, q);
        w_pp.row(q) = mv.cache->wpp_rows.row(mv.position_index);
        w_pp.col(q) = mv.cache->wpp_rows.row(mv.position_index).transpose();
        w_pp(q, q) = diag;
    }

    // mover-mover couplings are position-dependent on both ends: recompute
    const Wavenumber k = Wavenumber::from_frequency_ghz(pre.f_ghz);
    for (size_t a = 0; a < moves.size(); ++a) {
        for (size_t b = a + 1; b < moves.size(); ++b) {
            const int qa = moves[a].cache->primary_index;
            const int qb = moves[b].cache->primary_index;
            const Position pa = moves[a].cache->positions[static_cast<size_t>(moves[a].position_index)];
            const Position pb = moves[b].cache->positions[static_cast<size_t>(moves[b].position_index)];
            if (pa.x == pb.x && pa.y == pb.y)
                throw SingularGeometryError("displace_multi_reduced: movers collide");
            const cdouble w = -green_function(pa, pb, k);
            w_pp(qa, qb) = w;
            w_pp(qb, qa) = w;
        }
    }

    return invert_substituted(pre, w_pp, sigma, psi, lambda);
}

ChannelMatrix combined_update(const EigenPrecompute& pre, cdouble lambda,
                              const std::vector<Move>& moves, const RisDelta& ris_delta) {
    Matrix r_inv;
    try {
        r_inv = moves.empty() ? shifted_reduce(pre, lambda)
                              : displace_multi_reduced(pre, moves, lambda);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(std::string("combined_update [shift/displacement]: ") + e.what());
    }
    try {
        return {woodbury_reduced_rt(r_inv, pre.map, ris_delta), pre.f_ghz, pre.cfg};
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(std::string("combined_update [ris delta]: ") + e.what());
    }
}

} // namespace rischan
