#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ocp/cost.hpp"
#include "ocp/evaluate.hpp"
#include "ocp/instance.hpp"
#include "ocp/io.hpp"
#include "ocp/verify.hpp"

using namespace ocp;

namespace {

Covering seq(const OcpInstance& inst, std::initializer_list<const char*> ids) {
    std::vector<std::string> v(ids.begin(), ids.end());
    return make_covering(inst, v);
}

std::vector<std::uint64_t> weights_of(const ResidualTrace& t) {
    std::vector<std::uint64_t> w;
    for (const auto& s : t.steps) w.push_back(s.residual_weight);
    return w;
}

// Small random instance for property checks: residual weights stay <= 30 so
// the naive unsigned evaluator below cannot overflow.
OcpInstance random_small_instance(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nlabels(1, 8), nedges(1, 6), w(1, 5), coin(0, 2);
    OcpInstance::Spec spec;
    int n = nlabels(rng), m = nedges(rng);
    for (int i = 1; i <= n; ++i)
        spec.labels.push_back({"s" + std::to_string(i), static_cast<std::uint64_t>(w(rng))});
    for (int e = 1; e <= m; ++e) {
        OcpInstance::Spec::EdgeSpec es;
        es.id = "E" + std::to_string(e);
        for (int i = 1; i <= n; ++i)
            if (coin(rng) == 0) es.elements.push_back("s" + std::to_string(i));
        if (es.elements.empty()) es.elements.push_back("s1");
        spec.edges.push_back(std::move(es));
    }
    // make edge 1 a sweep edge so coverage always holds
    spec.edges[0].elements.clear();
    for (int i = 1; i <= n; ++i) spec.edges[0].elements.push_back("s" + std::to_string(i));
    return OcpInstance::build(std::move(spec));
}

Covering random_covering(const OcpInstance& inst, std::mt19937_64& rng, bool full) {
    std::uniform_int_distribution<std::size_t> pick(0, inst.edge_count() - 1);
    std::uniform_int_distribution<int> len(0, 8);
    Covering c;
    for (int i = len(rng); i > 0; --i) c.sequence.push_back(pick(rng));
    if (full)  // force coverage by appending the sweep edge
        c.sequence.push_back(0);
    return c;
}

// Naive reference: plain unsigned arithmetic, no sparse representation.
std::uint64_t naive_cost(const OcpInstance& inst, const Covering& cov) {
    std::vector<char> seen(inst.universe_size(), 0);
    std::uint64_t sum = 0;
    for (std::size_t e : cov.sequence) {
        std::uint64_t u = 0;
        for (std::size_t x : inst.edge(e).elements)
            if (!seen[x]) {
                seen[x] = 1;
                u += inst.element(x).weight;
            }
        if (u > 0) sum += std::uint64_t{1} << u;
    }
    return sum;
}

} // namespace

TEST_CASE("instance validation at build") {
    OcpInstance::Spec ok;
    ok.labels = {{"s1", 1}};
    ok.edges = {{"E1", {"s1"}}};
    CHECK_NOTHROW(OcpInstance::build(ok));

    SECTION("zero weight rejected") {
        auto bad = ok;
        bad.labels[0].weight = 0;
        CHECK_THROWS_AS(OcpInstance::build(bad), ValidationError);
    }
    SECTION("duplicate element id rejected") {
        auto bad = ok;
        bad.extra_elements = {{"s1", 2}};
        CHECK_THROWS_AS(OcpInstance::build(bad), ValidationError);
    }
    SECTION("unknown element in edge rejected") {
        auto bad = ok;
        bad.edges[0].elements.push_back("nope");
        CHECK_THROWS_AS(OcpInstance::build(bad), ValidationError);
    }
    SECTION("uncovered required label rejected") {
        auto bad = ok;
        bad.labels.push_back({"s2", 1});
        CHECK_THROWS_AS(OcpInstance::build(bad), ValidationError);
    }
    SECTION("empty edge rejected") {
        auto bad = ok;
        bad.edges.push_back({"E2", {}});
        CHECK_THROWS_AS(OcpInstance::build(bad), ValidationError);
    }
    SECTION("duplicate element within an edge rejected") {
        auto bad = ok;
        bad.edges[0].elements = {"s1", "s1"};
        CHECK_THROWS_AS(OcpInstance::build(bad), ValidationError);
    }
}

TEST_CASE("testB residual trace of the optimal sequence") {
    auto inst = load_fixture("testB");
    auto trace = residual_trace(inst, seq(inst, {"E4", "E3", "E2", "E1"}));
    CHECK(weights_of(trace) == std::vector<std::uint64_t>{4, 8, 2, 4});
    CHECK(total_cost(trace).to_uint() == 292);
}

TEST_CASE("testA total cost of the optimal sequence") {
    auto inst = load_fixture("testA");
    auto trace = residual_trace(inst, seq(inst, {"E4", "E3", "E2", "E1"}));
    auto cost = total_cost(trace);
    CHECK(cost.to_uint() == 592);
    // 2^4 + 2^8 + 2^6 + 2^8 normalizes to 2^9 + 2^6 + 2^4
    CHECK(cost.exponents() == std::vector<std::uint64_t>{9, 6, 4});
}

TEST_CASE("empty sequence gives an empty trace and zero cost") {
    auto inst = load_fixture("testB");
    auto trace = residual_trace(inst, Covering{});
    CHECK(trace.steps.empty());
    CHECK(total_cost(trace).is_zero());
}

TEST_CASE("repeated edge has empty residual") {
    auto inst = load_fixture("testB");
    auto trace = residual_trace(inst, seq(inst, {"E4", "E4"}));
    CHECK(weights_of(trace) == std::vector<std::uint64_t>{4, 0});
    CHECK(trace.steps[1].residual.empty());
    CHECK(trace.steps[1].partial_cost.is_zero());
}

TEST_CASE("covers") {
    auto a = load_fixture("testA");
    CHECK(covers(a, seq(a, {"E4", "E3", "E2", "E1"})));
    CHECK_FALSE(covers(a, seq(a, {"E1"})));
    auto b = load_fixture("testB");
    CHECK(covers(b, seq(b, {"E4", "E1", "E2"})));
}

TEST_CASE("normalize_covering drops zero-residual steps") {
    auto b = load_fixture("testB");

    auto n1 = normalize_covering(b, seq(b, {"E4", "E4", "E3", "E2", "E1"}));
    auto expect1 = seq(b, {"E4", "E3", "E2", "E1"});
    CHECK(n1.sequence == expect1.sequence);
    CHECK(total_cost(residual_trace(b, n1)).to_uint() == 292);

    // already minimal: fixpoint
    auto n2 = normalize_covering(b, expect1);
    CHECK(n2.sequence == expect1.sequence);

    // E3 contributes nothing after E4, E1, E2
    auto n3 = normalize_covering(b, seq(b, {"E4", "E1", "E2", "E3"}));
    auto expect3 = seq(b, {"E4", "E1", "E2"});
    CHECK(n3.sequence == expect3.sequence);

    CHECK_THROWS_AS(normalize_covering(b, seq(b, {"E1"})), ValidationError);
}

TEST_CASE("verify_certificate on testB") {
    auto text = serialize_instance(load_fixture("testB"));
    auto opt = seq(load_fixture("testB"), {"E4", "E3", "E2", "E1"});

    auto with_budget = [&](const std::string& b) {
        return parse_instance(text + "budget " + b + "\n");
    };
    auto inst292 = with_budget("292");
    CHECK(verify_certificate(inst292, opt).accepted);
    CHECK(verify_certificate(inst292, opt).reason == VerdictReason::Accepted);

    auto inst291 = with_budget("291");
    auto v = verify_certificate(inst291, opt);
    CHECK_FALSE(v.accepted);
    CHECK(v.reason == VerdictReason::BudgetExceeded);

    auto not_covering = verify_certificate(inst292, seq(inst292, {"E1"}));
    CHECK(not_covering.reason == VerdictReason::NotACovering);

    CHECK_THROWS_AS(verify_certificate(load_fixture("testB"), opt), ConfigError);
}

TEST_CASE("verify_certificate oversized exponent") {
    // one label of weight 11, budget 1024: 11 > floor(log2 1024) = 10
    auto inst = parse_instance(
        "ocp 1\nlabel s1 11\nedge E1 s1\nbudget 1024\n");
    auto v = verify_certificate(inst, seq(inst, {"E1"}));
    CHECK_FALSE(v.accepted);
    CHECK(v.reason == VerdictReason::OversizedExponent);
}

TEST_CASE("property: residual sets are disjoint and union matches used edges") {
    std::mt19937_64 rng(123);
    for (int iter = 0; iter < 300; ++iter) {
        auto inst = random_small_instance(rng);
        auto cov = random_covering(inst, rng, false);
        auto trace = residual_trace(inst, cov);

        std::vector<int> count(inst.universe_size(), 0);
        for (const auto& s : trace.steps)
            for (std::size_t x : s.residual) ++count[x];

        std::vector<char> in_union(inst.universe_size(), 0);
        for (std::size_t e : cov.sequence)
            for (std::size_t x : inst.edge(e).elements) in_union[x] = 1;

        for (std::size_t x = 0; x < inst.universe_size(); ++x) {
            CHECK(count[x] <= 1);                    // pairwise disjoint
            CHECK(count[x] == (in_union[x] ? 1 : 0));  // union equals used edges
        }
        // u_i matches the residual set and f_i = 2^{u_i}
        for (const auto& s : trace.steps) {
            std::uint64_t u = 0;
            for (std::size_t x : s.residual) u += inst.element(x).weight;
            CHECK(u == s.residual_weight);
            CHECK(s.partial_cost == (u ? BigCost::pow2(u) : BigCost::zero()));
        }
    }
}

TEST_CASE("property: total cost matches a naive evaluator") {
    std::mt19937_64 rng(321);
    for (int iter = 0; iter < 300; ++iter) {
        auto inst = random_small_instance(rng);
        auto cov = random_covering(inst, rng, false);
        CHECK(total_cost(residual_trace(inst, cov)).to_uint() == naive_cost(inst, cov));
    }
}

TEST_CASE("property: appending an edge never decreases cost") {
    std::mt19937_64 rng(55);
    for (int iter = 0; iter < 300; ++iter) {
        auto inst = random_small_instance(rng);
        auto cov = random_covering(inst, rng, false);
        auto base = total_cost(residual_trace(inst, cov));
        std::uniform_int_distribution<std::size_t> pick(0, inst.edge_count() - 1);
        Covering longer = cov;
        longer.sequence.push_back(pick(rng));
        CHECK(total_cost(residual_trace(inst, longer)) >= base);
    }
}

TEST_CASE("property: verifier agrees with the evaluator under the budget") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::uint64_t> budget_dist(1, 5000);
    for (int iter = 0; iter < 300; ++iter) {
        auto inst_plain = random_small_instance(rng);
        auto cov = random_covering(inst_plain, rng, rng() % 2 == 0);
        std::uint64_t budget = budget_dist(rng);
        auto inst = parse_instance(serialize_instance(inst_plain) + "budget " +
                                   std::to_string(budget) + "\n");

        auto verdict = verify_certificate(inst, cov);
        bool expect = covers(inst, cov) &&
                      total_cost(residual_trace(inst, cov)) <= BigCost::from_uint(budget);
        CHECK(verdict.accepted == expect);
    }
}

TEST_CASE("property: normalize preserves cost and coverage") {
    std::mt19937_64 rng(88);
    for (int iter = 0; iter < 300; ++iter) {
        auto inst = random_small_instance(rng);
        auto cov = random_covering(inst, rng, true);
        auto norm = normalize_covering(inst, cov);
        CHECK(covers(inst, norm));
        CHECK(total_cost(residual_trace(inst, norm)) == total_cost(residual_trace(inst, cov)));
        // no repeated edges after normalization
        auto s = norm.sequence;
        std::sort(s.begin(), s.end());
        CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    }
}
