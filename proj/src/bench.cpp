// SPDX-License-Identifier: Apache-2.0
#include "rischan/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rischan/interaction.hpp"
#include "rischan/oracle.hpp"
#include "rischan/reduction.hpp"
#include "rischan/updates.hpp"

namespace rischan {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> random_bits(std::mt19937_64& rng, int n) {
    std::vector<int> bits(static_cast<size_t>(n));
    for (auto& b : bits) b = static_cast<int>(rng() & 1u);
    return bits;
}

std::vector<int> flip_some(std::mt19937_64& rng, const std::vector<int>& base, int max_flips) {
    std::vector<int> bits = base;
    std::uniform_int_distribution<int> nflip(1, std::max(1, max_flips));
    std::uniform_int_distribution<size_t> pick(0, bits.size() - 1);
    const int f = nflip(rng);
    for (int i = 0; i < f; ++i) {
        const size_t k = pick(rng);
        bits[k] = 1 - bits[k];
    }
    return bits;
}

std::vector<int> sample_indices(int total, int want) {
    std::vector<int> out;
    const int step = std::max(1, total / std::max(1, want));
    for (int i = 0; i < total; i += step) out.push_back(i);
    return out;
}

double rel_err(const Matrix& got, const Matrix& want) {
    const double nw = want.norm();
    return nw == 0.0 ? (got.norm() == 0.0 ? 0.0 : 1.0) : (got - want).norm() / nw;
}

Position random_free_position(std::mt19937_64& rng, const std::vector<DipoleParams>& dipoles) {
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const auto& d : dipoles) {
        lo_x = std::min(lo_x, d.x);
        hi_x = std::max(hi_x, d.x);
        lo_y = std::min(lo_y, d.y);
        hi_y = std::max(hi_y, d.y);
    }
    std::uniform_real_distribution<double> ux(lo_x, hi_x), uy(lo_y, hi_y);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Position pos{ux(rng), uy(rng)};
        bool ok = true;
        for (const auto& d : dipoles)
            if (std::hypot(d.x - pos.x, d.y - pos.y) < 2e-3) { ok = false; break; }
        if (ok) return pos;
    }
    throw DomainError("run_bench: could not place a free trajectory position");
}

} // namespace

BenchReport run_bench(const Scenario& sc, int realizations,
                      const std::vector<std::string>& methods, uint64_t seed,
                      int max_flips) {
    const IndexMap map = build_index_map(sc);
    const double f = sc.freq_grid.points().front();
    const int n_error_samples = std::min(realizations, 5);

    std::mt19937_64 rng(seed);
    BenchReport report;

    // Baseline: full re-assembly + full N x N solve, median of three repeats.
    std::vector<double> baseline_times;
    const auto baseline_bits = random_bits(rng, sc.n_ris());
    {
        auto cfg = sc.n_ris() > 0 ? RisConfiguration::from_bits(baseline_bits)
                                  : RisConfiguration::all_zero(0);
        channel_full(assemble(sc, map, f, cfg)); // warm-up
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = Clock::now();
            channel_full(assemble(sc, map, f, cfg));
            baseline_times.push_back(seconds_since(t0));
        }
    }
    std::sort(baseline_times.begin(), baseline_times.end());
    report.baseline_seconds_per_realization = baseline_times[1];

    const auto base_cfg = sc.n_ris() > 0 ? RisConfiguration::from_bits(baseline_bits)
                                         : RisConfiguration::all_zero(0);
    const InteractionMatrix wm = assemble(sc, map, f, base_cfg);
    const auto sample = sample_indices(realizations, n_error_samples);

    for (const std::string& method : methods) {
        BenchRow row;
        row.method = method;
        row.n = map.n();
        row.p = map.p();
        row.s = map.s();
        row.realizations = realizations;
        try {
            if (method == "woodbury_reduced" || method == "woodbury_full") {
                if (sc.n_ris() == 0) throw DomainError("scenario has no RIS elements");
                row.m = std::min(max_flips, sc.n_ris());

                std::vector<std::vector<int>> targets;
                for (int r = 0; r < realizations; ++r)
                    targets.push_back(flip_some(rng, baseline_bits, row.m));

                std::vector<Matrix> results(static_cast<size_t>(realizations));
                if (method == "woodbury_reduced") {
                    const ReducedSystem rs = reduce(wm);
                    // warm-up
                    woodbury_reduced_channel(
                        rs, one_bit_plan(sc, baseline_bits, targets[0], f).delta);
                    const auto t0 = Clock::now();
                    for (int r = 0; r < realizations; ++r) {
                        const auto plan = one_bit_plan(sc, baseline_bits,
                                                       targets[static_cast<size_t>(r)], f);
                        // complementary baseline not cached here: fall back to
                        // the direct delta when the complement side wins
                        const RisDelta delta =
                            plan.use_complement
                                ? ris_delta_between(sc, base_cfg,
                                                    RisConfiguration::from_bits(
                                                        targets[static_cast<size_t>(r)]), f)
                                : plan.delta;
                        results[static_cast<size_t>(r)] =
                            woodbury_reduced_channel(rs, delta).h;
                    }
                    row.total_seconds = seconds_since(t0);
                } else {
                    Eigen::PartialPivLU<Matrix> lu(wm.w);
                    const Matrix w_inv = lu.solve(Matrix::Identity(map.n(), map.n()));
                    woodbury_full(w_inv, map,
                                  ris_delta_between(sc, base_cfg,
                                                    RisConfiguration::from_bits(targets[0]), f));
                    const auto t0 = Clock::now();
                    for (int r = 0; r < realizations; ++r) {
                        const RisDelta delta = ris_delta_between(
                            sc, base_cfg,
                            RisConfiguration::from_bits(targets[static_cast<size_t>(r)]), f);
                        const Matrix upd = woodbury_full(w_inv, map, delta);
                        results[static_cast<size_t>(r)] = upd.block(
                            map.offset(Group::R), map.offset(Group::T), map.n_rx, map.n_tx);
                    }
                    row.total_seconds = seconds_since(t0);
                }
                for (int r : sample) {
                    const auto oracle = channel_full(assemble(
                        sc, map, f, RisConfiguration::from_bits(targets[static_cast<size_t>(r)])));
                    row.max_rel_error = std::max(
                        row.max_rel_error, rel_err(results[static_cast<size_t>(r)], oracle.h));
                }
            } else if (method == "shifted_reduce") {
                if (map.s() == 0) throw DomainError("scenario has no secondary dipoles");
                const EigenPrecompute pre = eigen_precompute(wm);
                std::uniform_real_distribution<double> u(-0.05, 0.05);
                std::vector<cdouble> lambdas;
                for (int r = 0; r < realizations; ++r)
                    lambdas.emplace_back(u(rng), u(rng));

                std::vector<Matrix> results(static_cast<size_t>(realizations));
                shifted_reduce(pre, lambdas[0]); // warm-up
                const auto t0 = Clock::now();
                for (int r = 0; r < realizations; ++r)
                    results[static_cast<size_t>(r)] =
                        rt_block(shifted_reduce(pre, lambdas[static_cast<size_t>(r)]), map);
                row.total_seconds = seconds_since(t0);

                for (int r : sample) {
                    InteractionMatrix shifted = wm;
                    for (int i = map.p(); i < map.n(); ++i)
                        shifted.w(i, i) -= lambdas[static_cast<size_t>(r)];
                    const auto oracle = channel_full(shifted);
                    row.max_rel_error = std::max(
                        row.max_rel_error, rel_err(results[static_cast<size_t>(r)], oracle.h));
                }
            } else if (method == "displace_reduced") {
                if (map.s() == 0) throw DomainError("scenario has no secondary dipoles");
                const int mover = map.offset(Group::R); // first receive antenna
                const auto dipoles = canonical_dipoles(sc, map);
                std::vector<Position> positions;
                for (int r = 0; r < realizations; ++r)
                    positions.push_back(random_free_position(rng, dipoles));

                const EigenPrecompute pre = eigen_precompute(wm);
                const TrajectoryCache cache = build_trajectory_cache(sc, wm, mover, positions);
                std::vector<Matrix> results(static_cast<size_t>(realizations));
                displace_reduced(pre, cache, 0); // warm-up
                const auto t0 = Clock::now();
                for (int r = 0; r < realizations; ++r)
                    results[static_cast<size_t>(r)] =
                        rt_block(displace_reduced(pre, cache, r), map);
                row.total_seconds = seconds_since(t0);

                for (int r : sample) {
                    Scenario moved = sc;
                    moved.rx[0].x = positions[static_cast<size_t>(r)].x;
                    moved.rx[0].y = positions[static_cast<size_t>(r)].y;
                    const auto oracle =
                        channel_full(assemble(moved, build_index_map(moved), f, base_cfg));
                    row.max_rel_error = std::max(
                        row.max_rel_error, rel_err(results[static_cast<size_t>(r)], oracle.h));
                }
            } else {
                throw DomainError("unknown method '" + method + "'");
            }
            row.seconds_per_realization = row.total_seconds / realizations;
            row.speedup = report.baseline_seconds_per_realization /
                          std::max(row.seconds_per_realization, 1e-12);
        } catch (const std::exception& e) {
            row.skipped = true;
            row.skip_reason = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string bench_report_json(const BenchReport& report) {
    nlohmann::json j;
    j["baseline_seconds_per_realization"] = report.baseline_seconds_per_realization;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
        j["rows"].push_back({{"method", r.method},
                             {"n", r.n},
                             {"p", r.p},
                             {"s", r.s},
                             {"m", r.m},
                             {"realizations", r.realizations},
                             {"total_seconds", r.total_seconds},
                             {"seconds_per_realization", r.seconds_per_realization},
                             {"speedup", r.speedup},
                             {"max_rel_error", r.max_rel_error},
                             {"skipped", r.skipped},
                             {"skip_reason", r.skip_reason}});
    }
    return j.dump(2);
}

BenchReport parse_bench_report_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    BenchReport report;
    report.baseline_seconds_per_realization =
        j.at("baseline_seconds_per_realization").get<double>();
    for (const auto& e : j.at("rows")) {
        BenchRow r;
        r.method = e.at("method").get<std::string>();
        r.n = e.at("n").get<int>();
        r.p = e.at("p").get<int>();
        r.s = e.at("s").get<int>();
        r.m = e.at("m").get<int>();
        r.realizations = e.at("realizations").get<int>();
        r.total_seconds = e.at("total_seconds").get<double>();
        r.seconds_per_realization = e.at("seconds_per_realization").get<double>();
        r.speedup = e.at("speedup").get<double>();
        r.max_rel_error = e.at("max_rel_error").get<double>();
        r.skipped = e.at("skipped").get<bool>();
        r.skip_reason = e.at("skip_reason").get<std::string>();
        report.rows.push_back(std::move(r));
    }
    return report;
}

std::string bench_report_table(const BenchReport& report) {
    std::ostringstream os;
    os << "baseline (re-assembly + full solve): "
       << report.baseline_seconds_per_realization << " s/realization\n";
    os << "method              N      p    s    m  realizations  s/realization  speedup   max_rel_err\n";
    for (const auto& r : report.rows) {
        if (r.skipped) {
            os << r.method << ": skipped (" << r.skip_reason << ")\n";
            continue;
        }
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%-18s %5d %5d %5d %4d %12d  %12.3e %9.1f  %11.3e\n",
                      r.method.c_str(), r.n, r.p, r.s, r.m, r.realizations,
                      r.seconds_per_realization, r.speedup, r.max_rel_error);
        os << buf;
    }
    return os.str();
}

} // namespace rischan
