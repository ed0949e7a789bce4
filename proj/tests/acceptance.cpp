// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here and must not be loosened.

#include <cstdio>
#include <functional>
#include <random>

#include "rischan/bench.hpp"
#include "rischan/oracle.hpp"
#include "rischan/specfun.hpp"
#include "rischan/updates.hpp"
#include "test_util.hpp"

using namespace rischan;

namespace {

bool criterion_reduced_exactness() {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 50; ++i) {
        const int n_tx = 1 + static_cast<int>(rng() % 3);
        const int n_rx = 1 + static_cast<int>(rng() % 3);
        const int n_ris = static_cast<int>(rng() % 13);
        const int n_env = 5 + static_cast<int>(rng() % 76);
        const Scenario sc = testutil::random_scenario(2000 + i, n_tx, n_rx, n_ris, n_env);
        const IndexMap map = build_index_map(sc);
        const auto wm = assemble(sc, map, 5.0, RisConfiguration::all_zero(n_ris));

        const Matrix w_inv = testutil::full_inverse(wm.w);
        const Matrix want = w_inv.block(map.offset(Group::R), map.offset(Group::T),
                                        map.n_rx, map.n_tx);
        if (testutil::rel_frob(rt_block(reduce(wm).r_inv, map), want) > 1e-10) return false;
    }
    return true;
}

bool criterion_woodbury() {
    std::mt19937_64 rng(102);
    for (int i = 0; i < 100; ++i) {
        const int n_ris = 2 + static_cast<int>(rng() % 11);
        const int n_env = 10 + static_cast<int>(rng() % 40);
        const Scenario sc = testutil::random_scenario(3000 + i, 2, 2, n_ris, n_env);
        const IndexMap map = build_index_map(sc);
        const double f = 5.0;
        const auto base = RisConfiguration::all_zero(n_ris);
        const auto rs = reduce(assemble(sc, map, f, base));

        const int m = 1 + static_cast<int>(rng() % n_ris);
        std::vector<int> bits(static_cast<size_t>(n_ris), 0);
        std::vector<int> order(static_cast<size_t>(n_ris));
        for (int k = 0; k < n_ris; ++k) order[static_cast<size_t>(k)] = k;
        std::shuffle(order.begin(), order.end(), rng);
        for (int k = 0; k < m; ++k) bits[static_cast<size_t>(order[static_cast<size_t>(k)])] = 1;
        const auto target = RisConfiguration::from_bits(bits);

        const auto got = woodbury_reduced_channel(rs, ris_delta_between(sc, base, target, f));
        const auto want = channel_full(assemble(sc, map, f, target));
        if (compare_channels(want, got).rel_frobenius > 1e-9) return false;
    }
    return true;
}

bool criterion_one_bit() {
    const int n_s = 16;
    const Scenario sc = testutil::random_scenario(103, 1, 2, n_s, 10);
    const IndexMap map = build_index_map(sc);
    const double f = 5.0;
    std::mt19937_64 rng(104);
    std::vector<int> baseline(static_cast<size_t>(n_s));
    for (auto& b : baseline) b = static_cast<int>(rng() & 1u);
    std::vector<int> complement;
    for (int b : baseline) complement.push_back(1 - b);

    // flip-count bound for every one of the 2^16 targets
    for (uint32_t t = 0; t < (1u << n_s); ++t) {
        std::vector<int> target(static_cast<size_t>(n_s));
        for (int k = 0; k < n_s; ++k) target[static_cast<size_t>(k)] = (t >> k) & 1u;
        if (one_bit_plan(sc, baseline, target, f).delta.m() > n_s / 2) return false;
    }

    // channel match on 50 sampled targets against the two cached baselines
    const auto rs0 = reduce(assemble(sc, map, f, RisConfiguration::from_bits(baseline)));
    const auto rs1 = reduce(assemble(sc, map, f, RisConfiguration::from_bits(complement)));
    for (int i = 0; i < 50; ++i) {
        std::vector<int> target(static_cast<size_t>(n_s));
        for (auto& b : target) b = static_cast<int>(rng() & 1u);
        const auto plan = one_bit_plan(sc, baseline, target, f);
        const auto got = woodbury_reduced_channel(plan.use_complement ? rs1 : rs0, plan.delta);
        const auto want = channel_full(assemble(sc, map, f, RisConfiguration::from_bits(target)));
        if (compare_channels(want, got).rel_frobenius > 1e-9) return false;
    }
    return true;
}

bool criterion_eigen_shift() {
    std::mt19937_64 rng(105);
    std::uniform_real_distribution<double> u(-0.05, 0.05);
    for (int i = 0; i < 20; ++i) {
        const int n_env = 10 + static_cast<int>(rng() % 40);
        const Scenario sc = testutil::random_scenario(4000 + i, 2, 2, 4, n_env);
        const IndexMap map = build_index_map(sc);
        const auto wm = assemble(sc, map, 5.0, RisConfiguration::all_zero(4));
        const auto pre = eigen_precompute(wm);

        if (testutil::rel_frob(shifted_reduce(pre, 0.0), reduce(wm).r_inv) > 1e-8) return false;
        for (int k = 0; k < 20; ++k) {
            const cdouble lambda(u(rng), u(rng));
            InteractionMatrix shifted = wm;
            for (int j = map.p(); j < map.n(); ++j) shifted.w(j, j) -= lambda;
            if (testutil::rel_frob(shifted_reduce(pre, lambda), reduce(shifted).r_inv) > 1e-8)
                return false;
        }
    }
    return true;
}

bool criterion_displacement() {
    std::mt19937_64 rng(106);
    std::uniform_real_distribution<double> u(-0.03, 0.03);
    for (int i = 0; i < 50; ++i) {
        const Scenario sc = testutil::random_scenario(5000 + i, 2, 2, 3,
                                                      15 + static_cast<int>(rng() % 30));
        const IndexMap map = build_index_map(sc);
        const double f = 5.0;
        const auto cfg = RisConfiguration::all_zero(3);
        const auto wm = assemble(sc, map, f, cfg);
        const Matrix w_inv = testutil::full_inverse(wm.w);
        const auto pre = eigen_precompute(wm);
        const auto dipoles = canonical_dipoles(sc, map);
        const int mover = map.offset(Group::R);
        const Position home = dipoles[static_cast<size_t>(mover)].position();

        // null move returns the input
        const auto null_delta = make_displacement(dipoles, mover, home, f);
        if ((displace_full(w_inv, null_delta) - w_inv).norm() > 1e-9 * w_inv.norm()) return false;

        const Position pos{home.x + u(rng), home.y + u(rng)};
        Scenario ms = sc;
        ms.rx[0].x = pos.x;
        ms.rx[0].y = pos.y;
        const auto wm_moved = assemble(ms, build_index_map(ms), f, cfg);

        // canonical-basis rank-2 path
        const auto delta = make_displacement(dipoles, mover, pos, f);
        if (testutil::rel_frob(displace_full(w_inv, delta),
                               testutil::full_inverse(wm_moved.w)) > 1e-9) return false;

        // reduced-basis cached path
        const auto cache = build_trajectory_cache(sc, wm, mover, {pos});
        if (testutil::rel_frob(displace_reduced(pre, cache, 0),
                               reduce(wm_moved).r_inv) > 1e-8) return false;

        // simultaneous two-mover cases on a fifth of the instances
        if (i % 5 == 0) {
            const int m1 = mover + 1; // rx[1]
            const Position h1 = dipoles[static_cast<size_t>(m1)].position();
            const Position p1{h1.x + u(rng), h1.y + u(rng)};
            const auto c1 = build_trajectory_cache(sc, wm, m1, {p1});
            Scenario ms2 = ms;
            ms2.rx[1].x = p1.x;
            ms2.rx[1].y = p1.y;
            const Matrix want = reduce(assemble(ms2, build_index_map(ms2), f, cfg)).r_inv;
            if (testutil::rel_frob(
                    displace_multi_reduced(pre, {Move{&cache, 0}, Move{&c1, 0}}), want) > 1e-8)
                return false;
        }
    }
    return true;
}

bool criterion_combined() {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> u(-0.02, 0.02);
    for (int i = 0; i < 20; ++i) {
        const Scenario sc = testutil::random_scenario(6000 + i, 2, 2, 6,
                                                      15 + static_cast<int>(rng() % 30));
        const IndexMap map = build_index_map(sc);
        const double f = 5.0;
        const auto base = RisConfiguration::all_zero(6);
        const auto wm = assemble(sc, map, f, base);
        const auto pre = eigen_precompute(wm);
        const auto dipoles = canonical_dipoles(sc, map);
        const int mover = map.offset(Group::R);

        const cdouble lambda(u(rng), u(rng));
        const Position pos{dipoles[static_cast<size_t>(mover)].x + u(rng),
                           dipoles[static_cast<size_t>(mover)].y + u(rng)};
        std::vector<int> bits(6);
        for (auto& b : bits) b = static_cast<int>(rng() & 1u);
        const auto target = RisConfiguration::from_bits(bits);
        const auto cache = build_trajectory_cache(sc, wm, mover, {pos});

        const auto got = combined_update(pre, lambda, {Move{&cache, 0}},
                                         ris_delta_between(sc, base, target, f));

        Scenario ms = sc;
        ms.rx[0].x = pos.x;
        ms.rx[0].y = pos.y;
        InteractionMatrix wref = assemble(ms, build_index_map(ms), f, target);
        for (int k = map.p(); k < map.n(); ++k) wref.w(k, k) -= lambda;
        if (compare_channels(channel_full(wref), got).rel_frobenius > 1e-8) return false;
    }
    return true;
}

bool criterion_performance() {
    const Scenario sc = load_scenario(std::string(RISCHAN_SCENARIO_DIR) + "/bench_large.json");
    const IndexMap map = build_index_map(sc);
    if (map.n() < 1000 || map.p() > 50) {
        std::fprintf(stderr, "bench scenario out of contract: n=%d p=%d\n", map.n(), map.p());
        return false;
    }
    const BenchReport report =
        run_bench(sc, 20, {"woodbury_reduced", "shifted_reduce"}, 108, 8);
    bool ok = true;
    for (const auto& row : report.rows) {
        std::fprintf(stderr, "  %-18s speedup %8.1fx  max rel err %.2e%s\n",
                     row.method.c_str(), row.speedup, row.max_rel_error,
                     row.skipped ? " (skipped)" : "");
        if (row.skipped || row.speedup < 20.0) ok = false;
        if (row.method == "woodbury_reduced" && row.max_rel_error > 1e-9) ok = false;
        if (row.method == "shifted_reduce" && row.max_rel_error > 1e-8) ok = false;
    }
    return ok && report.rows.size() == 2;
}

bool criterion_specfun() {
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> u(1e-3, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng);
        if (std::abs(specfun::bessel_j0(x) - testutil::j0_series(x)) > 1e-10) return false;
        if (std::abs(specfun::bessel_y0(x) - testutil::y0_series(x)) > 1e-10) return false;
    }
    return true;
}

bool criterion_invariants() {
    const Scenario sc = testutil::random_scenario(110, 2, 2, 8, 40);
    const IndexMap map = build_index_map(sc);
    const auto wm = assemble(sc, map, 5.0, RisConfiguration::all_zero(8));
    for (int i = 0; i < map.n(); ++i)
        for (int j = 0; j < i; ++j)
            if (wm.w(i, j) != wm.w(j, i)) return false;

    const auto pre = eigen_precompute(wm);
    for (const auto& [rows, cols] : pre.retained_shapes())
        if (rows == map.s() && cols == map.s()) return false;
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"1 reduced-basis exactness (50 scenarios, 1e-10)", criterion_reduced_exactness},
        {"2 Woodbury RIS update (100 instances, 1e-9)", criterion_woodbury},
        {"3 1-bit planning bound + 50 sampled channels (1e-9)", criterion_one_bit},
        {"4 eigen-shift update (20x20 lambdas, 1e-8)", criterion_eigen_shift},
        {"5 displacement updates (50 moves, 1e-9/1e-8)", criterion_displacement},
        {"6 combined updates (20 triples, 1e-8)", criterion_combined},
        {"7 performance floor (N>=1000, >=20x)", criterion_performance},
        {"8 special functions vs series oracle (1000 pts, 1e-10)", criterion_specfun},
        {"9 structural invariants (symmetry, memory contract)", criterion_invariants},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "  exception: %s\n", e.what());
        }
        std::printf("criterion %-55s %s\n", c.name, ok ? "PASS" : "FAIL");
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
