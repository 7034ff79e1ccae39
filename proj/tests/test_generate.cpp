#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ocp/generate.hpp"
#include "ocp/io.hpp"
#include "ocp/solvers.hpp"
#include "ocp/three_partition.hpp"

using namespace ocp;

TEST_CASE("random-ocp generation is deterministic per seed") {
    GenParams p;
    p.seed = 1;
    p.labels = 8;
    p.edges = 6;
    p.max_weight = 5;
    CHECK(serialize_instance(gen_random_ocp(p)) == serialize_instance(gen_random_ocp(p)));

    GenParams q = p;
    q.seed = 2;
    CHECK(serialize_instance(gen_random_ocp(p)) != serialize_instance(gen_random_ocp(q)));
}

TEST_CASE("generated instances always pass the load-time coverage check") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        GenParams p;
        p.seed = rng();
        p.labels = 1 + rng() % 10;
        p.edges = 1 + rng() % 8;
        // build() would throw on an uncovered label
        CHECK_NOTHROW(parse_instance(serialize_instance(gen_random_ocp(p))));
    }
}

TEST_CASE("planted 3p instances are valid and YES") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
        GenParams p;
        p.seed = rng();
        p.m = 1 + rng() % 3;
        p.target = 9 + rng() % 7;
        auto tp = gen_planted_3p(p);
        CHECK(validate_3p(tp).empty());
        CHECK(solve_3p_bruteforce(tp).has_value());
    }
    CHECK(serialize_3p(gen_planted_3p({.seed = 9, .m = 2, .target = 12})) ==
          serialize_3p(gen_planted_3p({.seed = 9, .m = 2, .target = 12})));
}

TEST_CASE("unconstrained 3p instances are valid; NO instances occur") {
    std::mt19937_64 rng(6);
    bool saw_no = false;
    for (int i = 0; i < 60; ++i) {
        GenParams p;
        p.seed = rng();
        p.m = 2;
        p.target = 13;
        auto tp = gen_unconstrained_3p(p);
        CHECK(validate_3p(tp).empty());
        if (!solve_3p_bruteforce(tp).has_value()) saw_no = true;
    }
    CHECK(saw_no);
}

TEST_CASE("infeasible knob ranges are rejected") {
    // B = 4: (1, 2) exclusive holds no integer triple summing to 4
    GenParams p;
    p.m = 1;
    p.target = 4;
    CHECK_THROWS_AS(gen_planted_3p(p), ValidationError);
}

TEST_CASE("gap report on the two fixtures") {
    std::vector<std::pair<std::string, OcpInstance>> batch;
    batch.emplace_back("testA", load_fixture("testA"));
    batch.emplace_back("testB", load_fixture("testB"));
    auto report = run_gap_experiment(batch);

    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].greedy_cost->to_uint() == 592);
    CHECK(report.rows[0].optimal_cost->to_uint() == 592);
    CHECK(report.rows[0].ratio() == Catch::Approx(1.0));
    CHECK(report.rows[1].greedy_cost->to_uint() == 336);
    CHECK(report.rows[1].optimal_cost->to_uint() == 292);
    CHECK(report.rows[1].ratio() == Catch::Approx(336.0 / 292.0).epsilon(1e-9));
}

TEST_CASE("gap report: empty batch and guard failures") {
    auto empty = run_gap_experiment({});
    CHECK(empty.rows.empty());
    CHECK(empty.solved() == 0);

    // guard failure lands in the row, not on the caller
    std::vector<std::pair<std::string, OcpInstance>> batch;
    batch.emplace_back("big", gen_random_ocp({.seed = 1, .labels = 12, .edges = 5}));
    SolveOptions tight;
    tight.max_universe = 4;
    auto report = run_gap_experiment(batch, tight);
    REQUIRE(report.rows.size() == 1);
    CHECK_FALSE(report.rows[0].ok());
    CHECK(report.solved() == 0);
}

TEST_CASE("property: gap ratios are always >= 1") {
    std::mt19937_64 rng(8);
    std::vector<std::pair<std::string, OcpInstance>> batch;
    for (int i = 0; i < 40; ++i) {
        GenParams p;
        p.seed = rng();
        p.labels = 2 + rng() % 7;
        p.edges = 1 + rng() % 6;
        batch.emplace_back("r" + std::to_string(i), gen_random_ocp(p));
    }
    auto report = run_gap_experiment(batch);
    for (const auto& row : report.rows) {
        REQUIRE(row.ok());
        CHECK(*row.greedy_cost >= *row.optimal_cost);
        CHECK(row.ratio() >= 1.0 - 1e-12);
    }
    CHECK(report.mean_ratio() >= 1.0 - 1e-12);
    CHECK(report.max_ratio() >= report.mean_ratio() - 1e-12);
}
