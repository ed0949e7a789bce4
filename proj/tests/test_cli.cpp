// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string cmd = std::string(RISCHAN_CLI_PATH) + " " + args + " > " + out_path + " 2> cli_stderr.tmp";
    const int status = std::system(cmd.c_str());
    RunResult r;
#ifdef _WIN32
    r.exit_code = status;
#else
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
    r.stdout_text = slurp(out_path);
    return r;
}

std::string scenario(const std::string& name) {
    return std::string(RISCHAN_SCENARIO_DIR) + "/" + name;
}

struct CsvRow {
    double f = 0;
    long realization = 0;
    int rx = 0, tx = 0;
    double re = 0, im = 0;
};

std::vector<CsvRow> parse_channel_csv(const std::string& text, std::string* header = nullptr) {
    std::istringstream in(text);
    std::string line;
    std::vector<CsvRow> rows;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {
            if (header) *header = line;
            first = false;
            continue;
        }
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        CsvRow r;
        REQUIRE((fields >> r.f >> r.realization >> r.rx >> r.tx >> r.re >> r.im));
        rows.push_back(r);
    }
    return rows;
}

} // namespace

TEST_CASE("channel: CSV shape and finite values") {
    const auto r = run_cli("channel --scenario " + scenario("demo.json"));
    REQUIRE(r.exit_code == 0);
    std::string header;
    const auto rows = parse_channel_csv(r.stdout_text, &header);
    CHECK(header == "freq_ghz,realization,rx,tx,re,im");
    CHECK(rows.size() == 5 * 2 * 2); // 5 frequency points, 2 rx, 2 tx
    for (const auto& row : rows) {
        CHECK(std::isfinite(row.re));
        CHECK(std::isfinite(row.im));
        CHECK(row.realization == 0);
    }
}

TEST_CASE("channel: reduced path agrees with --oracle to 1e-10") {
    const auto fast = run_cli("channel --scenario " + scenario("demo.json"));
    const auto full = run_cli("channel --oracle --scenario " + scenario("demo.json"));
    REQUIRE(fast.exit_code == 0);
    REQUIRE(full.exit_code == 0);
    const auto a = parse_channel_csv(fast.stdout_text);
    const auto b = parse_channel_csv(full.stdout_text);
    REQUIRE(a.size() == b.size());
    double num = 0, den = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        num += (a[i].re - b[i].re) * (a[i].re - b[i].re) +
               (a[i].im - b[i].im) * (a[i].im - b[i].im);
        den += b[i].re * b[i].re + b[i].im * b[i].im;
    }
    CHECK(std::sqrt(num / den) < 1e-10);
}

TEST_CASE("channel: --threads does not change the output") {
    const auto serial = run_cli("channel --scenario " + scenario("demo.json"));
    const auto parallel = run_cli("channel --threads 4 --scenario " + scenario("demo.json"));
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(serial.stdout_text == parallel.stdout_text);
}

TEST_CASE("channel: --out writes the same CSV to a file") {
    const auto direct = run_cli("channel --scenario " + scenario("demo.json"));
    const auto filed = run_cli("channel --scenario " + scenario("demo.json") + " --out cli_channel.tmp");
    REQUIRE(filed.exit_code == 0);
    CHECK(slurp("cli_channel.tmp") == direct.stdout_text);
    std::remove("cli_channel.tmp");
}

TEST_CASE("input errors exit with code 2") {
    SUBCASE("missing scenario file") {
        CHECK(run_cli("channel --scenario no_such_file.json").exit_code == 2);
    }
    SUBCASE("malformed JSON") {
        std::ofstream("cli_bad.json") << "{ not json";
        CHECK(run_cli("channel --scenario cli_bad.json").exit_code == 2);
        std::remove("cli_bad.json");
    }
    SUBCASE("bits length mismatch") {
        CHECK(run_cli("channel --bits 101 --scenario " + scenario("demo.json")).exit_code == 2);
    }
    SUBCASE("bad mover selector") {
        CHECK(run_cli("trajectory --mover bogus:0 --positions " +
                      scenario("demo_trajectory.csv") + " --scenario " +
                      scenario("demo.json")).exit_code == 2);
    }
    SUBCASE("static env dipole cannot be a mover") {
        CHECK(run_cli("trajectory --mover env:0 --positions " +
                      scenario("demo_trajectory.csv") + " --scenario " +
                      scenario("demo.json")).exit_code == 2);
    }
}

TEST_CASE("sweep-config with --scratch cross-check passes") {
    const auto r = run_cli("sweep-config --random 6 --seed 11 --scratch --scenario " +
                           scenario("demo.json"));
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_channel_csv(r.stdout_text);
    CHECK(rows.size() == 5 * 6 * 2 * 2);
    CHECK(rows.back().realization == 5);
}

TEST_CASE("sweep-lambda with --scratch cross-check passes") {
    const auto r = run_cli("sweep-lambda --lambdas \"0.01,0.02;-0.015,0;0,-0.01\" "
                           "--scratch --scenario " + scenario("demo.json"));
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_channel_csv(r.stdout_text);
    CHECK(rows.size() == 5 * 3 * 2 * 2);
}

TEST_CASE("trajectory with --scratch cross-check passes and carries positions") {
    const auto r = run_cli("trajectory --mover rx:0 --positions " +
                           scenario("demo_trajectory.csv") + " --scratch --scenario " +
                           scenario("demo.json"));
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.stdout_text);
    std::string header;
    std::getline(in, header);
    CHECK(header == "freq_ghz,realization,pos_x,pos_y,rx,tx,re,im");
    int n_rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++n_rows;
    CHECK(n_rows == 5 * 20 * 2 * 2); // 5 freqs, 20 positions, 2x2 channel
}

TEST_CASE("validate exits 0 normally and 1 under an injected fault") {
    const auto ok = run_cli("validate --instances 4 --seed 3 --scenario " + scenario("demo.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.stdout_text.find("PASS") != std::string::npos);
    CHECK(ok.stdout_text.find("FAIL") == std::string::npos);

    const auto bad = run_cli("validate --instances 2 --seed 3 --inject-perturbation 1.0 "
                             "--scenario " + scenario("demo.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.stdout_text.find("FAIL") != std::string::npos);
}

TEST_CASE("bench smoke run emits a table and JSON report") {
    const auto r = run_cli("bench --realizations 4 --methods woodbury_reduced --seed 5 "
                           "--json cli_bench.tmp.json --scenario " + scenario("demo.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.find("woodbury_reduced") != std::string::npos);
    const std::string js = slurp("cli_bench.tmp.json");
    CHECK(js.find("\"speedup\"") != std::string::npos);
    std::remove("cli_bench.tmp.json");
}
