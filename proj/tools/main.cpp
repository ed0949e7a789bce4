// SPDX-License-Identifier: Apache-2.0
//
// rischan: physics-compliant channel computation for dipole-modeled,
// RIS-parametrized radio environments, with fast realization updates.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rischan/bench.hpp"
#include "rischan/interaction.hpp"
#include "rischan/oracle.hpp"
#include "rischan/reduction.hpp"
#include "rischan/updates.hpp"

using namespace rischan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct GlobalOpts {
    std::string scenario_path;
    std::string out_path;
    uint64_t seed = 0;
    int threads = 1;
    bool scratch = false;
    bool oracle = false;
    double tolerance = -1.0; // negative: per-command default
};

void add_global_opts(CLI::App* cmd, GlobalOpts& g, bool scenario_required = true) {
    auto* opt = cmd->add_option("--scenario", g.scenario_path, "scenario JSON file");
    if (scenario_required) opt->required();
    cmd->add_option("--out", g.out_path, "output path (default: stdout)");
    cmd->add_option("--seed", g.seed, "RNG seed");
    cmd->add_option("--threads", g.threads, "worker threads for frequency points");
    cmd->add_flag("--scratch", g.scratch, "cross-check every realization from scratch");
    cmd->add_flag("--oracle", g.oracle, "use the full-matrix oracle path");
    cmd->add_option("--tolerance", g.tolerance, "cross-check tolerance override");
}

std::ostream& open_output(const GlobalOpts& g, std::ofstream& file) {
    if (g.out_path.empty()) return std::cout;
    file.open(g.out_path);
    if (!file) throw DomainError("cannot open output file " + g.out_path);
    return file;
}

std::string fmt_row(double f, long realization, int rx, int tx, cdouble v,
                    const std::string& extra = "") {
    char buf[192];
    std::snprintf(buf, sizeof(buf), "%.9g,%ld,%s%d,%d,%.17g,%.17g\n", f, realization,
                  extra.c_str(), rx, tx, v.real(), v.imag());
    return buf;
}

void append_channel_rows(std::string& out, double f, long realization, const Matrix& h,
                         const std::string& extra = "") {
    for (int r = 0; r < h.rows(); ++r)
        for (int t = 0; t < h.cols(); ++t)
            out += fmt_row(f, realization, r, t, h(r, t), extra);
}

// Runs fn(i) -> string for i in [0, n) on up to `threads` workers and
// concatenates the results in index order.
std::string ordered_parallel(int n, int threads, const std::function<std::string(int)>& fn) {
    std::vector<std::string> parts(static_cast<size_t>(n));
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) parts[static_cast<size_t>(i)] = fn(i);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n) return;
                parts[static_cast<size_t>(i)] = fn(i);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min(threads, n); ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::string out;
    for (auto& p : parts) out += p;
    return out;
}

std::vector<int> parse_bits(const std::string& s) {
    std::vector<int> bits;
    for (char c : s) {
        if (c == '0') bits.push_back(0);
        else if (c == '1') bits.push_back(1);
        else throw DomainError("bit string must contain only 0 and 1");
    }
    return bits;
}

std::string bits_to_string(const std::vector<int>& bits) {
    std::string s;
    for (int b : bits) s += b ? '1' : '0';
    return s;
}

int resolve_mover(const Scenario& sc, const IndexMap& map, const std::string& selector) {
    const auto colon = selector.find(':');
    if (colon == std::string::npos)
        throw DomainError("mover selector must look like rx:0, tx:1, ris:2, or env:5");
    const std::string group = selector.substr(0, colon);
    const int idx = std::stoi(selector.substr(colon + 1));
    if (group == "tx") {
        if (idx < 0 || idx >= map.n_tx) throw DomainError("tx index out of range");
        return idx;
    }
    if (group == "rx") {
        if (idx < 0 || idx >= map.n_rx) throw DomainError("rx index out of range");
        return map.offset(Group::R) + idx;
    }
    if (group == "ris") {
        if (idx < 0 || idx >= map.n_ris) throw DomainError("ris index out of range");
        return map.ris_global(idx);
    }
    if (group == "env") {
        if (idx < 0 || idx >= sc.n_env()) throw DomainError("env index out of range");
        for (int slot = 0; slot < map.n_dyn_env; ++slot)
            if (map.env_order[static_cast<size_t>(slot)] == idx)
                return map.offset(Group::E) + slot;
        throw DomainError("env dipole " + std::to_string(idx) +
                          " is not listed in dynamic_env and cannot be moved");
    }
    throw DomainError("unknown mover group '" + group + "'");
}

std::vector<Position> read_positions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open positions file " + path);
    std::vector<Position> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        Position p;
        if (!(row >> p.x >> p.y))
            throw DomainError("bad positions line: " + line);
        out.push_back(p);
    }
    return out;
}

struct CrossCheckFailure {
    double worst = 0.0;
    long realization = -1;
};

const char* kCsvHeader = "freq_ghz,realization,rx,tx,re,im\n";

int cmd_channel(const GlobalOpts& g, const std::string& bits_str) {
    const Scenario sc = load_scenario(g.scenario_path);
    const IndexMap map = build_index_map(sc);
    const RisConfiguration cfg = bits_str.empty()
        ? RisConfiguration::all_zero(sc.n_ris())
        : RisConfiguration::from_bits(parse_bits(bits_str));
    if (cfg.size() != sc.n_ris())
        throw DomainError("--bits length does not match the scenario's RIS size");

    const auto freqs = sc.freq_grid.points();
    const std::string body = ordered_parallel(
        static_cast<int>(freqs.size()), g.threads, [&](int fi) {
            const double f = freqs[static_cast<size_t>(fi)];
            const InteractionMatrix wm = assemble(sc, map, f, cfg);
            const ChannelMatrix h = g.oracle ? channel_full(wm)
                                             : channel_from_reduced(reduce(wm));
            std::string rows;
            append_channel_rows(rows, f, 0, h.h);
            return rows;
        });

    std::ofstream file;
    auto& out = open_output(g, file);
    out << kCsvHeader << body;
    return kExitOk;
}

int cmd_sweep_config(const GlobalOpts& g, const std::string& configs_path, int n_random) {
    const Scenario sc = load_scenario(g.scenario_path);
    const IndexMap map = build_index_map(sc);
    if (sc.n_ris() < 1) throw DomainError("sweep-config requires at least one RIS element");
    const double tol = g.tolerance > 0 ? g.tolerance : 1e-9;

    std::vector<std::vector<int>> targets;
    if (!configs_path.empty()) {
        std::ifstream in(configs_path);
        if (!in) throw DomainError("cannot open configs file " + configs_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto bits = parse_bits(line);
            if (static_cast<int>(bits.size()) != sc.n_ris())
                throw DomainError("config line length mismatch: " + line);
            targets.push_back(std::move(bits));
        }
    } else {
        std::mt19937_64 rng(g.seed);
        for (int i = 0; i < n_random; ++i) {
            std::vector<int> bits(static_cast<size_t>(sc.n_ris()));
            for (auto& b : bits) b = static_cast<int>(rng() & 1u);
            targets.push_back(std::move(bits));
        }
    }
    if (targets.empty()) throw DomainError("no configurations to sweep");

    const std::vector<int> baseline(static_cast<size_t>(sc.n_ris()), 0);
    std::vector<int> complement(static_cast<size_t>(sc.n_ris()), 1);

    CrossCheckFailure fail;
    std::mutex fail_mu;
    const auto freqs = sc.freq_grid.points();
    const std::string body = ordered_parallel(
        static_cast<int>(freqs.size()), g.threads, [&](int fi) {
            const double f = freqs[static_cast<size_t>(fi)];
            const ReducedSystem rs0 =
                reduce(assemble(sc, map, f, RisConfiguration::from_bits(baseline)));
            const ReducedSystem rs1 =
                reduce(assemble(sc, map, f, RisConfiguration::from_bits(complement)));
            std::string rows;
            for (size_t c = 0; c < targets.size(); ++c) {
                const auto plan = one_bit_plan(sc, baseline, targets[c], f);
                const ChannelMatrix h = woodbury_reduced_channel(
                    plan.use_complement ? rs1 : rs0, plan.delta);
                if (g.scratch) {
                    const auto oracle = channel_full(
                        assemble(sc, map, f, RisConfiguration::from_bits(targets[c])));
                    const auto diff = compare_channels(oracle, h);
                    std::lock_guard<std::mutex> lock(fail_mu);
                    if (diff.rel_frobenius > fail.worst) {
                        fail.worst = diff.rel_frobenius;
                        fail.realization = static_cast<long>(c);
                    }
                }
                append_channel_rows(rows, f, static_cast<long>(c), h.h);
            }
            return rows;
        });

    std::ofstream file;
    auto& out = open_output(g, file);
    out << kCsvHeader << body;
    if (g.scratch) {
        std::cerr << "sweep-config scratch check: worst rel error " << fail.worst << "\n";
        if (fail.worst > tol) {
            std::cerr << "tolerance " << tol << " exceeded at realization "
                      << fail.realization << "\n";
            return kExitValidation;
        }
    }
    return kExitOk;
}

std::vector<cdouble> parse_lambdas(const std::string& spec) {
    // "re,im;re,im;..." or a file of "re,im" lines
    std::vector<cdouble> out;
    std::string text = spec;
    std::ifstream in(spec);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        std::replace(text.begin(), text.end(), '\n', ';');
    }
    std::istringstream items(text);
    std::string item;
    while (std::getline(items, item, ';')) {
        if (item.empty()) continue;
        std::replace(item.begin(), item.end(), ',', ' ');
        std::istringstream pair(item);
        double re = 0, im = 0;
        if (!(pair >> re)) throw DomainError("bad lambda entry: " + item);
        pair >> im;
        out.emplace_back(re, im);
    }
    return out;
}

int cmd_sweep_lambda(const GlobalOpts& g, const std::string& lambda_spec) {
    const Scenario sc = load_scenario(g.scenario_path);
    const IndexMap map = build_index_map(sc);
    if (map.s() < 1) throw DomainError("sweep-lambda requires secondary (static env) dipoles");
    const double tol = g.tolerance > 0 ? g.tolerance : 1e-8;
    const auto lambdas = parse_lambdas(lambda_spec);
    if (lambdas.empty()) throw DomainError("no lambda values given");
    const RisConfiguration cfg = RisConfiguration::all_zero(sc.n_ris());

    CrossCheckFailure fail;
    std::mutex fail_mu;
    const auto freqs = sc.freq_grid.points();
    const std::string body = ordered_parallel(
        static_cast<int>(freqs.size()), g.threads, [&](int fi) {
            const double f = freqs[static_cast<size_t>(fi)];
            const InteractionMatrix wm = assemble(sc, map, f, cfg);
            const EigenPrecompute pre = eigen_precompute(wm);
            std::string rows;
            for (size_t li = 0; li < lambdas.size(); ++li) {
                const Matrix h = rt_block(shifted_reduce(pre, lambdas[li]), map);
                if (g.scratch) {
                    InteractionMatrix shifted = wm;
                    for (int i = map.p(); i < map.n(); ++i) shifted.w(i, i) -= lambdas[li];
                    const auto oracle = channel_full(shifted);
                    const double err = oracle.h.norm() == 0.0
                        ? (h.norm() == 0.0 ? 0.0 : 1.0)
                        : (oracle.h - h).norm() / oracle.h.norm();
                    std::lock_guard<std::mutex> lock(fail_mu);
                    if (err > fail.worst) {
                        fail.worst = err;
                        fail.realization = static_cast<long>(li);
                    }
                }
                append_channel_rows(rows, f, static_cast<long>(li), h);
            }
            return rows;
        });

    std::ofstream file;
    auto& out = open_output(g, file);
    out << kCsvHeader << body;
    if (g.scratch) {
        std::cerr << "sweep-lambda scratch check: worst rel error " << fail.worst << "\n";
        if (fail.worst > tol) return kExitValidation;
    }
    return kExitOk;
}

int cmd_trajectory(const GlobalOpts& g, const std::string& mover_sel,
                   const std::string& positions_path) {
    const Scenario sc = load_scenario(g.scenario_path);
    const IndexMap map = build_index_map(sc);
    if (map.s() < 1) throw DomainError("trajectory requires secondary (static env) dipoles");
    const double tol = g.tolerance > 0 ? g.tolerance : 1e-8;
    const int mover = resolve_mover(sc, map, mover_sel);
    const auto positions = read_positions_file(positions_path);
    if (positions.empty()) throw DomainError("positions file is empty");
    const RisConfiguration cfg = RisConfiguration::all_zero(sc.n_ris());

    // scratch oracle: rebuild the scenario with the mover relocated
    auto moved_scenario = [&](Position pos) {
        Scenario m = sc;
        if (mover < map.n_tx) {
            m.tx[static_cast<size_t>(mover)].x = pos.x;
            m.tx[static_cast<size_t>(mover)].y = pos.y;
        } else if (mover < map.offset(Group::S)) {
            auto& d = m.rx[static_cast<size_t>(mover - map.offset(Group::R))];
            d.x = pos.x;
            d.y = pos.y;
        } else if (mover < map.offset(Group::E)) {
            auto& d = m.ris[static_cast<size_t>(mover - map.offset(Group::S))].base;
            d.x = pos.x;
            d.y = pos.y;
        } else {
            const int env_idx = map.env_order[static_cast<size_t>(mover - map.offset(Group::E))];
            m.env[static_cast<size_t>(env_idx)].x = pos.x;
            m.env[static_cast<size_t>(env_idx)].y = pos.y;
        }
        return m;
    };

    CrossCheckFailure fail;
    std::mutex fail_mu;
    const auto freqs = sc.freq_grid.points();
    const std::string body = ordered_parallel(
        static_cast<int>(freqs.size()), g.threads, [&](int fi) {
            const double f = freqs[static_cast<size_t>(fi)];
            const InteractionMatrix wm = assemble(sc, map, f, cfg);
            const EigenPrecompute pre = eigen_precompute(wm);
            const TrajectoryCache cache = build_trajectory_cache(sc, wm, mover, positions);
            std::string rows;
            for (int k = 0; k < cache.n_positions(); ++k) {
                const Matrix h = rt_block(displace_reduced(pre, cache, k), map);
                if (g.scratch && (k % std::max(1, cache.n_positions() / 5) == 0)) {
                    const Scenario ms = moved_scenario(positions[static_cast<size_t>(k)]);
                    const auto oracle = channel_full(assemble(ms, build_index_map(ms), f, cfg));
                    const double err = (oracle.h - h).norm() / oracle.h.norm();
                    std::lock_guard<std::mutex> lock(fail_mu);
                    if (err > fail.worst) {
                        fail.worst = err;
                        fail.realization = k;
                    }
                }
                char extra[80];
                std::snprintf(extra, sizeof(extra), "%.17g,%.17g,",
                              positions[static_cast<size_t>(k)].x,
                              positions[static_cast<size_t>(k)].y);
                append_channel_rows(rows, f, k, h, extra);
            }
            return rows;
        });

    std::ofstream file;
    auto& out = open_output(g, file);
    out << "freq_ghz,realization,pos_x,pos_y,rx,tx,re,im\n" << body;
    if (g.scratch) {
        std::cerr << "trajectory scratch check: worst rel error " << fail.worst << "\n";
        if (fail.worst > tol) return kExitValidation;
    }
    return kExitOk;
}

int cmd_bench(const GlobalOpts& g, int realizations, const std::string& methods_csv,
              const std::string& json_path, int max_flips) {
    const Scenario sc = load_scenario(g.scenario_path);
    std::vector<std::string> methods;
    std::istringstream items(methods_csv);
    std::string item;
    while (std::getline(items, item, ',')) methods.push_back(item);

    const BenchReport report = run_bench(sc, realizations, methods, g.seed, max_flips);

    std::ofstream file;
    auto& out = open_output(g, file);
    out << bench_report_table(report);
    if (!json_path.empty()) {
        std::ofstream jf(json_path);
        if (!jf) throw DomainError("cannot open " + json_path);
        jf << bench_report_json(report) << "\n";
    }
    return kExitOk;
}

int cmd_validate(const GlobalOpts& g, int instances, double inject) {
    const Scenario sc = load_scenario(g.scenario_path);
    const IndexMap map = build_index_map(sc);
    const double f = sc.freq_grid.points().front();
    std::mt19937_64 rng(g.seed);

    struct PathResult {
        std::string name;
        double tol;
        double worst = 0.0;
        uint64_t worst_seed = 0;
    };
    std::vector<PathResult> results;

    auto random_bits = [&](std::mt19937_64& r) {
        std::vector<int> bits(static_cast<size_t>(sc.n_ris()));
        for (auto& b : bits) b = static_cast<int>(r() & 1u);
        return bits;
    };
    auto record = [&](PathResult& pr, double err, uint64_t seed) {
        if (err > pr.worst) {
            pr.worst = err;
            pr.worst_seed = seed;
        }
    };
    auto rel = [&](const Matrix& got, const Matrix& want) {
        double e = (want - got).norm() / want.norm();
        return e + inject;
    };

    const RisConfiguration base_cfg = RisConfiguration::all_zero(sc.n_ris());
    const InteractionMatrix wm = assemble(sc, map, f, base_cfg);
    const ReducedSystem rs = reduce(wm);
    const auto dipoles = canonical_dipoles(sc, map);

    const bool has_ris = sc.n_ris() > 0;
    const bool has_secondary = map.s() > 0;

    if (has_ris) {
        PathResult pr{"woodbury_reduced", 1e-9};
        for (int i = 0; i < instances; ++i) {
            const uint64_t iseed = rng();
            std::mt19937_64 r(iseed);
            const auto target = random_bits(r);
            const auto delta = ris_delta_between(
                sc, base_cfg, RisConfiguration::from_bits(target), f);
            const Matrix got = woodbury_reduced_channel(rs, delta).h;
            const Matrix want = channel_full(
                assemble(sc, map, f, RisConfiguration::from_bits(target))).h;
            record(pr, rel(got, want), iseed);
        }
        results.push_back(pr);
    }
    if (has_secondary) {
        PathResult pr{"shifted_reduce", 1e-8};
        const EigenPrecompute pre = eigen_precompute(wm);
        std::uniform_real_distribution<double> u(-0.05, 0.05);
        for (int i = 0; i < instances; ++i) {
            const uint64_t iseed = rng();
            std::mt19937_64 r(iseed);
            const cdouble lambda(u(r), u(r));
            const Matrix got = rt_block(shifted_reduce(pre, lambda), map);
            InteractionMatrix shifted = wm;
            for (int k = map.p(); k < map.n(); ++k) shifted.w(k, k) -= lambda;
            record(pr, rel(got, channel_full(shifted).h), iseed);
        }
        results.push_back(pr);

        PathResult pd{"displace_reduced", 1e-8};
        const int mover = map.offset(Group::R);
        std::uniform_real_distribution<double> jitter(-0.02, 0.02);
        for (int i = 0; i < instances; ++i) {
            const uint64_t iseed = rng();
            std::mt19937_64 r(iseed);
            const Position pos{dipoles[static_cast<size_t>(mover)].x + jitter(r),
                               dipoles[static_cast<size_t>(mover)].y + jitter(r)};
            const Matrix got =
                rt_block(displace_reduced_uncached(sc, wm, pre, mover, pos), map);
            Scenario ms = sc;
            ms.rx[0].x = pos.x;
            ms.rx[0].y = pos.y;
            const Matrix want =
                channel_full(assemble(ms, build_index_map(ms), f, base_cfg)).h;
            record(pd, rel(got, want), iseed);
        }
        results.push_back(pd);
    }
    if (has_ris && has_secondary) {
        PathResult pr{"combined_update", 1e-8};
        const EigenPrecompute pre = eigen_precompute(wm);
        std::uniform_real_distribution<double> u(-0.03, 0.03);
        std::uniform_real_distribution<double> jitter(-0.02, 0.02);
        const int mover = map.offset(Group::R);
        for (int i = 0; i < instances; ++i) {
            const uint64_t iseed = rng();
            std::mt19937_64 r(iseed);
            const cdouble lambda(u(r), u(r));
            const Position pos{dipoles[static_cast<size_t>(mover)].x + jitter(r),
                               dipoles[static_cast<size_t>(mover)].y + jitter(r)};
            const auto target = random_bits(r);
            const auto delta = ris_delta_between(
                sc, base_cfg, RisConfiguration::from_bits(target), f);
            const TrajectoryCache cache = build_trajectory_cache(sc, wm, mover, {pos});
            const Matrix got =
                combined_update(pre, lambda, {Move{&cache, 0}}, delta).h;

            Scenario ms = sc;
            ms.rx[0].x = pos.x;
            ms.rx[0].y = pos.y;
            InteractionMatrix wref = assemble(ms, build_index_map(ms), f,
                                              RisConfiguration::from_bits(target));
            for (int k = map.p(); k < map.n(); ++k) wref.w(k, k) -= lambda;
            record(pr, rel(got, channel_full(wref).h), iseed);
        }
        results.push_back(pr);
    }

    bool ok = true;
    for (const auto& pr : results) {
        const bool pass = pr.worst <= pr.tol;
        ok = ok && pass;
        std::printf("%-18s worst rel error %.3e (tol %.0e, seed %llu) %s\n",
                    pr.name.c_str(), pr.worst, pr.tol,
                    static_cast<unsigned long long>(pr.worst_seed),
                    pass ? "PASS" : "FAIL");
    }
    return ok ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"physics-compliant RIS channel computation with fast realization updates"};
    app.require_subcommand(1);

    GlobalOpts g_channel, g_sweep_cfg, g_sweep_lambda, g_traj, g_bench, g_validate;
    std::string bits_str, configs_path, lambda_spec, mover_sel, positions_path;
    std::string methods = "woodbury_reduced,shifted_reduce";
    std::string bench_json;
    int n_random = 100, realizations = 100, instances = 20, max_flips = 8;
    double inject = 0.0;

    auto* c_channel = app.add_subcommand("channel", "compute H over the frequency grid");
    add_global_opts(c_channel, g_channel);
    c_channel->add_option("--bits", bits_str, "RIS bit configuration (default: all zeros)");

    auto* c_sweep = app.add_subcommand("sweep-config", "channel ensemble over RIS configurations");
    add_global_opts(c_sweep, g_sweep_cfg);
    c_sweep->add_option("--configs", configs_path, "file with one bit string per line");
    c_sweep->add_option("--random", n_random, "number of random configurations");

    auto* c_lambda = app.add_subcommand("sweep-lambda", "channel ensemble over diagonal shifts");
    add_global_opts(c_lambda, g_sweep_lambda);
    c_lambda->add_option("--lambdas", lambda_spec, "re,im pairs separated by ';', or a file")
        ->required();

    auto* c_traj = app.add_subcommand("trajectory", "channel along a mobile dipole trajectory");
    add_global_opts(c_traj, g_traj);
    c_traj->add_option("--mover", mover_sel, "dipole selector, e.g. rx:0 or env:5")->required();
    c_traj->add_option("--positions", positions_path, "CSV file of x,y positions")->required();

    auto* c_bench = app.add_subcommand("bench", "speedup benchmark vs full re-assembly");
    add_global_opts(c_bench, g_bench);
    c_bench->add_option("--realizations", realizations, "realizations per method");
    c_bench->add_option("--methods", methods, "comma-separated method list");
    c_bench->add_option("--json", bench_json, "also write a JSON report here");
    c_bench->add_option("--max-flips", max_flips, "RIS elements flipped per realization");

    auto* c_validate = app.add_subcommand("validate", "randomized oracle-equivalence checks");
    add_global_opts(c_validate, g_validate);
    c_validate->add_option("--instances", instances, "instances per update path");
    c_validate->add_option("--inject-perturbation", inject, "test hook: add to every error")
        ->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_channel->parsed()) return cmd_channel(g_channel, bits_str);
        if (c_sweep->parsed()) return cmd_sweep_config(g_sweep_cfg, configs_path, n_random);
        if (c_lambda->parsed()) return cmd_sweep_lambda(g_sweep_lambda, lambda_spec);
        if (c_traj->parsed()) return cmd_trajectory(g_traj, mover_sel, positions_path);
        if (c_bench->parsed())
            return cmd_bench(g_bench, realizations, methods, bench_json, max_flips);
        if (c_validate->parsed()) return cmd_validate(g_validate, instances, inject);
    } catch (const ConditioningError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ResonanceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const UpdateSingularityError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const SingularGeometryError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitInput;
}
