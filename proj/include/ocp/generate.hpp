#ifndef OCP_GENERATE_HPP
#define OCP_GENERATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <string>
#include <vector>

#include "ocp/errors.hpp"
#include "ocp/instance.hpp"
#include "ocp/solvers.hpp"
#include "ocp/three_partition.hpp"

namespace ocp {

/// Knobs for the random generators. Same (params, seed) -> same instance.
struct GenParams {
    std::uint64_t seed = 0;
    // random-ocp
    std::size_t labels = 8;
    std::size_t edges = 6;
    std::uint64_t max_weight = 5;
    // planted-3p / unconstrained-3p
    std::uint64_t m = 2;
    std::uint64_t target = 12;  // B
};

/// Random OCP instance: weights uniform in [1, max_weight], each edge a
/// random subset; a final sweep assigns any uncovered label to a random
/// edge so the result always passes the load-time coverage check.
inline OcpInstance gen_random_ocp(const GenParams& p) {
    if (p.labels == 0 || p.edges == 0)
        throw ValidationError("gen_random_ocp: need at least one label and one edge");
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::uint64_t> weight(1, p.max_weight);

    OcpInstance::Spec spec;
    for (std::size_t i = 1; i <= p.labels; ++i)
        spec.labels.push_back({"s" + std::to_string(i), weight(rng)});

    std::uniform_int_distribution<int> coin(0, 2);  // ~1/3 membership
    std::vector<std::vector<char>> member(p.edges, std::vector<char>(p.labels, 0));
    for (std::size_t e = 0; e < p.edges; ++e)
        for (std::size_t l = 0; l < p.labels; ++l)
            if (coin(rng) == 0) member[e][l] = 1;

    std::uniform_int_distribution<std::size_t> pick_edge(0, p.edges - 1);
    for (std::size_t l = 0; l < p.labels; ++l) {
        bool covered = false;
        for (std::size_t e = 0; e < p.edges; ++e) covered = covered || member[e][l];
        if (!covered) member[pick_edge(rng)][l] = 1;
    }

    for (std::size_t e = 0; e < p.edges; ++e) {
        OcpInstance::Spec::EdgeSpec es;
        es.id = "E" + std::to_string(e + 1);
        for (std::size_t l = 0; l < p.labels; ++l)
            if (member[e][l]) es.elements.push_back("s" + std::to_string(l + 1));
        if (es.elements.empty())  // empty edges are invalid; give it one label
            es.elements.push_back("s" + std::to_string(pick_edge(rng) % p.labels + 1));
        spec.edges.push_back(std::move(es));
    }
    return OcpInstance::build(std::move(spec));
}

namespace gen_detail {

// values strictly inside (B/4, B/2)
inline std::uint64_t min_part(std::uint64_t b) { return b / 4 + 1; }

inline bool in_range(std::uint64_t v, std::uint64_t b) { return 4 * v > b && 2 * v < b; }

} // namespace gen_detail

/// Planted family: m triples each summing to B with all entries strictly in
/// (B/4, B/2), indices shuffled. Always a YES instance.
inline ThreePartitionInstance gen_planted_3p(const GenParams& p) {
    using namespace gen_detail;
    const std::uint64_t b = p.target;
    std::uint64_t lo = min_part(b);
    std::uint64_t hi = (b % 2 == 0) ? b / 2 - 1 : b / 2;  // largest v with 2v < b
    if (lo > hi || 3 * lo > b || 3 * hi < b)
        throw ValidationError("gen_planted_3p: no valid triple for B=" + std::to_string(b));

    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::uint64_t> part(lo, hi);
    std::vector<std::uint64_t> values;
    for (std::uint64_t i = 0; i < p.m; ++i) {
        for (;;) {
            std::uint64_t a1 = part(rng), a2 = part(rng);
            if (a1 + a2 >= b) continue;
            std::uint64_t a3 = b - a1 - a2;
            if (!in_range(a3, b)) continue;
            values.push_back(a1);
            values.push_back(a2);
            values.push_back(a3);
            break;
        }
    }
    std::shuffle(values.begin(), values.end(), rng);
    return {p.m, b, std::move(values)};
}

/// Unconstrained family: a multiset meeting the definitional constraints with
/// no planted partition; YES status unknown. Sampled in range and nudged to
/// the exact sum m*B.
inline ThreePartitionInstance gen_unconstrained_3p(const GenParams& p) {
    using namespace gen_detail;
    const std::uint64_t b = p.target;
    std::uint64_t lo = min_part(b);
    std::uint64_t hi = (b % 2 == 0) ? b / 2 - 1 : b / 2;
    if (lo > hi) throw ValidationError("gen_unconstrained_3p: empty value range for B=" +
                                       std::to_string(b));

    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::uint64_t> part(lo, hi);
    std::uniform_int_distribution<std::size_t> pick(0, 3 * p.m - 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::uint64_t> values;
        for (std::uint64_t i = 0; i < 3 * p.m; ++i) values.push_back(part(rng));
        std::uint64_t want = p.m * b;
        std::uint64_t have = 0;
        for (auto v : values) have += v;
        for (int nudges = 0; nudges < 1000 && have != want; ++nudges) {
            std::size_t k = pick(rng);
            if (have < want && values[k] < hi) { ++values[k]; ++have; }
            else if (have > want && values[k] > lo) { --values[k]; --have; }
        }
        if (have != want) continue;
        ThreePartitionInstance tp{p.m, b, std::move(values)};
        if (validate_3p(tp).empty()) return tp;
    }
    throw ValidationError("gen_unconstrained_3p: could not meet the sum constraint");
}

/// One greedy-vs-optimal comparison row. Costs can be astronomically large,
/// so the ratio is carried as the exact cost pair plus a log2 difference.
struct GapRow {
    std::string id;
    std::optional<BigCost> greedy_cost;
    std::optional<BigCost> optimal_cost;
    std::string error;  // nonempty when a solver guard fired

    bool ok() const { return error.empty(); }
    double log2_ratio() const { return greedy_cost->log2_approx() - optimal_cost->log2_approx(); }
    double ratio() const { return std::exp2(log2_ratio()); }
};

struct GapReport {
    std::vector<GapRow> rows;

    std::size_t solved() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += r.ok();
        return n;
    }
    double mean_ratio() const {
        double sum = 0;
        std::size_t n = 0;
        for (const auto& r : rows)
            if (r.ok()) { sum += r.ratio(); ++n; }
        return n ? sum / static_cast<double>(n) : 0.0;
    }
    double max_ratio() const {
        double mx = 0;
        for (const auto& r : rows)
            if (r.ok()) mx = std::max(mx, r.ratio());
        return mx;
    }
};

/// Runs greedy and the exact DP on each instance. Guard failures land in the
/// row, not on the caller.
inline GapReport run_gap_experiment(const std::vector<std::pair<std::string, OcpInstance>>& batch,
                                    const SolveOptions& opts = {}) {
    GapReport report;
    for (const auto& [id, inst] : batch) {
        GapRow row;
        row.id = id;
        try {
            row.greedy_cost = solve_greedy(inst).cost;
            row.optimal_cost = solve_exact_dp(inst, opts)->cost;
        } catch (const OcpError& e) {
            row.error = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace ocp

#endif
