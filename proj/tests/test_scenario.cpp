// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "rischan/scenario.hpp"
#include "test_util.hpp"

using namespace rischan;

TEST_CASE("validate: well-formed scenario has no diagnostics") {
    const Scenario sc = testutil::random_scenario(1, 2, 2, 8, 50);
    CHECK(validate(sc).empty());
}

TEST_CASE("validate: coincident positions are reported") {
    Scenario sc = testutil::random_scenario(2, 1, 1, 0, 3);
    sc.env[1].x = sc.env[0].x;
    sc.env[1].y = sc.env[0].y;
    const auto diags = validate(sc);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("coincident") != std::string::npos);
    CHECK(diags[0].path == "env[1]");
}

TEST_CASE("validate: dynamic_env out of range") {
    Scenario sc = testutil::random_scenario(3, 1, 1, 0, 3);
    sc.dynamic_env = {3};
    const auto diags = validate(sc);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("out of range") != std::string::npos);
}

TEST_CASE("index map arithmetic") {
    SUBCASE("no dynamic env") {
        const Scenario sc = testutil::random_scenario(4, 1, 1, 2, 3);
        const IndexMap m = build_index_map(sc);
        CHECK(m.p() == 4);
        CHECK(m.s() == 3);
        CHECK(m.n() == 7);
    }
    SUBCASE("one dynamic env dipole is promoted into P") {
        const Scenario sc = testutil::random_scenario(4, 1, 1, 2, 3, 1);
        const IndexMap m = build_index_map(sc);
        CHECK(m.p() == 5);
        CHECK(m.s() == 2);
    }
    SUBCASE("free-space limit: no environment") {
        const Scenario sc = testutil::random_scenario(4, 1, 1, 2, 0);
        const IndexMap m = build_index_map(sc);
        CHECK(m.s() == 0);
        CHECK(m.p() == m.n());
    }
    SUBCASE("invalid scenario is rejected") {
        Scenario sc = testutil::random_scenario(4, 1, 1, 0, 2);
        sc.dynamic_env = {5};
        CHECK_THROWS_AS(build_index_map(sc), DomainError);
    }
}

TEST_CASE("index map is deterministic and canonical") {
    const Scenario sc = testutil::random_scenario(5, 2, 2, 4, 10, 3);
    const IndexMap a = build_index_map(sc);
    const IndexMap b = build_index_map(sc);
    CHECK(a.env_order == b.env_order);

    // dynamic dipoles occupy the head of the E range
    for (int i = 0; i < a.n_dyn_env; ++i)
        CHECK(a.env_order[static_cast<size_t>(i)] == sc.dynamic_env[static_cast<size_t>(i)]);
    const auto dipoles = canonical_dipoles(sc, a);
    CHECK(static_cast<int>(dipoles.size()) == a.n());
    CHECK(dipoles[0].x == sc.tx[0].x);
    CHECK(dipoles[static_cast<size_t>(a.offset(Group::R))].x == sc.rx[0].x);
}

TEST_CASE("configuration to inverse polarizabilities") {
    const Scenario sc = testutil::random_scenario(6, 1, 1, 2, 0);
    const double f = 5.0;

    SUBCASE("all-zero bits evaluate the state-0 resonance") {
        const Vector v = configuration_to_inverse_polarizabilities(
            sc, RisConfiguration::all_zero(2), f);
        for (int k = 0; k < 2; ++k) {
            DipoleParams d = sc.ris[static_cast<size_t>(k)].base;
            d.f_res_ghz = sc.ris[static_cast<size_t>(k)].f_res_state0_ghz;
            CHECK(v[k] == inverse_polarizability(f, d));
        }
    }
    SUBCASE("analog configurations pass through unchanged") {
        Vector in(2);
        in << cdouble(0.5, -0.25), cdouble(-1.5, 0.1);
        const Vector out = configuration_to_inverse_polarizabilities(
            sc, RisConfiguration::from_analog(in), f);
        CHECK(out == in);
    }
    SUBCASE("distinct states give distinct values") {
        const Vector v = configuration_to_inverse_polarizabilities(
            sc, RisConfiguration::from_bits({0, 1}), f);
        CHECK(v[0] != v[1]);
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(configuration_to_inverse_polarizabilities(
                            sc, RisConfiguration::all_zero(3), f),
                        DomainError);
    }
}

TEST_CASE("scenario JSON round-trip is field-exact") {
    const Scenario sc = testutil::random_scenario(7, 2, 1, 3, 12, 2);
    const Scenario back = parse_scenario(serialize_scenario(sc));
    REQUIRE(back.n_total() == sc.n_total());
    for (int i = 0; i < sc.n_tx(); ++i) {
        CHECK(back.tx[static_cast<size_t>(i)].x == sc.tx[static_cast<size_t>(i)].x);
        CHECK(back.tx[static_cast<size_t>(i)].gamma_ghz == sc.tx[static_cast<size_t>(i)].gamma_ghz);
    }
    for (int i = 0; i < sc.n_env(); ++i) {
        CHECK(back.env[static_cast<size_t>(i)].x == sc.env[static_cast<size_t>(i)].x);
        CHECK(back.env[static_cast<size_t>(i)].y == sc.env[static_cast<size_t>(i)].y);
    }
    for (int i = 0; i < sc.n_ris(); ++i) {
        CHECK(back.ris[static_cast<size_t>(i)].f_res_state1_ghz ==
              sc.ris[static_cast<size_t>(i)].f_res_state1_ghz);
    }
    CHECK(back.dynamic_env == sc.dynamic_env);
    CHECK(back.freq_grid.start_ghz == sc.freq_grid.start_ghz);
    CHECK(back.freq_grid.n_points == sc.freq_grid.n_points);
}

TEST_CASE("scenario parser rejects unknown keys and bad documents") {
    CHECK_THROWS_AS(parse_scenario("{"), DomainError);
    CHECK_THROWS_AS(parse_scenario("[1,2]"), DomainError);
    CHECK_THROWS_AS(parse_scenario(R"({"freq_grid":{"start_ghz":1,"stop_ghz":1,"n_points":1},"bogus":3})"),
                    DomainError);
    CHECK_THROWS_AS(
        parse_scenario(
            R"({"freq_grid":{"start_ghz":1,"stop_ghz":1,"n_points":1},"tx":[{"x":0,"y":0,"f_res_ghz":1,"chi":1,"gamma_ghz":0,"extra":1}]})"),
        DomainError);
}
