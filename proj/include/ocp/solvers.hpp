#ifndef OCP_SOLVERS_HPP
#define OCP_SOLVERS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "ocp/bitset.hpp"
#include "ocp/cost.hpp"
#include "ocp/errors.hpp"
#include "ocp/evaluate.hpp"
#include "ocp/instance.hpp"

namespace ocp {

struct SolveStats {
    std::uint64_t nodes = 0;  // states/steps explored, solver-dependent
};

struct SolveResult {
    Covering covering;
    BigCost cost;
    bool optimal = false;
    SolveStats stats;
};

struct SolveOptions {
    std::size_t max_universe = 64;       // state-space guard for the DP solver
    std::size_t max_perm_edges = 9;      // factorial guard for the permutation solver
    std::uint64_t max_states = 5'000'000;
    std::optional<BigCost> cost_cap;     // DP only: stop once the optimum provably exceeds this
    std::optional<CoverSet> initial_covered;  // DP only: solve the remaining subproblem
};

namespace detail {

inline std::uint64_t marginal_weight(const OcpInstance& inst, const CoverSet& covered,
                                     std::size_t edge) {
    std::uint64_t u = 0;
    for (std::size_t x : inst.edge(edge).elements)
        if (!covered.test(x)) u += inst.element(x).weight;
    return u;
}

inline CoverSet required_mask(const OcpInstance& inst) {
    CoverSet s(inst.universe_size());
    for (std::size_t i = 0; i < inst.required_count(); ++i) s.set(i);
    return s;
}

} // namespace detail

/// Greedy heuristic: repeatedly take the candidate edge with the smallest
/// residual weight, where candidates are edges covering at least one
/// still-uncovered required label. Ties go to the lowest declaration index.
inline SolveResult solve_greedy(const OcpInstance& inst) {
    if (inst.coverage_infeasible())
        throw ValidationError("solve_greedy: edges cannot cover the required labels");
    std::vector<char> seen(inst.universe_size(), 0);
    std::size_t uncovered = inst.required_count();
    SolveResult res;
    while (uncovered > 0) {
        std::size_t best = inst.edge_count();
        std::uint64_t best_u = 0;
        for (std::size_t e = 0; e < inst.edge_count(); ++e) {
            bool touches_required = false;
            std::uint64_t u = 0;
            for (std::size_t x : inst.edge(e).elements) {
                if (seen[x]) continue;
                u += inst.element(x).weight;
                if (x < inst.required_count()) touches_required = true;
            }
            if (!touches_required) continue;
            if (best == inst.edge_count() || u < best_u) {
                best = e;
                best_u = u;
            }
        }
        res.covering.sequence.push_back(best);
        for (std::size_t x : inst.edge(best).elements) {
            if (seen[x]) continue;
            seen[x] = 1;
            if (x < inst.required_count()) --uncovered;
        }
        ++res.stats.nodes;
    }
    res.cost = total_cost(residual_trace(inst, res.covering));
    res.optimal = false;
    return res;
}

/// Exact solver: cheapest-first search over covered-element sets.
///
/// The marginal cost of appending an edge depends only on the set of covered
/// elements, so two sequences with equal coverage are interchangeable and the
/// state space collapses to reachable unions of edges. Returns nullopt only
/// when a cost cap is set and no covering fits under it.
inline std::optional<SolveResult> solve_exact_dp(const OcpInstance& inst,
                                                 const SolveOptions& opts = {}) {
    if (inst.universe_size() > opts.max_universe)
        throw GuardError("solve_exact_dp: universe size " + std::to_string(inst.universe_size()) +
                         " exceeds guard " + std::to_string(opts.max_universe));
    if (inst.coverage_infeasible()) {
        if (opts.cost_cap) return std::nullopt;
        throw ValidationError("solve_exact_dp: edges cannot cover the required labels");
    }

    struct Node {
        CoverSet covered;
        BigCost cost;
        std::size_t prev = SIZE_MAX;
        std::size_t via_edge = SIZE_MAX;
        bool settled = false;
    };

    const CoverSet required = detail::required_mask(inst);
    std::vector<Node> nodes;
    std::unordered_map<CoverSet, std::size_t, CoverSet::Hash> index;

    // queue entries snapshot the cost; stale entries are skipped on pop
    using QueueEntry = std::pair<BigCost, std::size_t>;
    auto cmp = [](const QueueEntry& a, const QueueEntry& b) { return b.first < a.first; };
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, decltype(cmp)> queue(cmp);

    CoverSet start = opts.initial_covered ? *opts.initial_covered : CoverSet(inst.universe_size());
    nodes.push_back({start, BigCost::zero(), SIZE_MAX, SIZE_MAX, false});
    index.emplace(start, 0);
    queue.push({BigCost::zero(), 0});

    SolveStats stats;
    while (!queue.empty()) {
        auto [cur_cost, cur] = queue.top();
        queue.pop();
        if (nodes[cur].settled || cur_cost != nodes[cur].cost) continue;
        nodes[cur].settled = true;
        ++stats.nodes;

        if (opts.cost_cap && nodes[cur].cost > *opts.cost_cap) return std::nullopt;

        if (nodes[cur].covered.contains(required)) {
            SolveResult res;
            res.cost = nodes[cur].cost;
            res.optimal = true;
            res.stats = stats;
            for (std::size_t n = cur; nodes[n].via_edge != SIZE_MAX; n = nodes[n].prev)
                res.covering.sequence.push_back(nodes[n].via_edge);
            std::reverse(res.covering.sequence.begin(), res.covering.sequence.end());
            return res;
        }

        for (std::size_t e = 0; e < inst.edge_count(); ++e) {
            std::uint64_t u = detail::marginal_weight(inst, nodes[cur].covered, e);
            if (u == 0) continue;  // no state change, no cost
            BigCost next_cost = nodes[cur].cost + BigCost::pow2(u);
            if (opts.cost_cap && next_cost > *opts.cost_cap) continue;
            CoverSet next = nodes[cur].covered;
            for (std::size_t x : inst.edge(e).elements) next.set(x);

            auto [it, inserted] = index.emplace(next, nodes.size());
            if (inserted) {
                if (nodes.size() >= opts.max_states)
                    throw GuardError("solve_exact_dp: state guard exceeded");
                queue.push({next_cost, it->second});
                nodes.push_back({std::move(next), std::move(next_cost), cur, e, false});
            } else {
                Node& n = nodes[it->second];
                if (!n.settled && next_cost < n.cost) {
                    n.cost = next_cost;
                    n.prev = cur;
                    n.via_edge = e;
                    queue.push({std::move(next_cost), it->second});
                }
            }
        }
    }
    if (opts.cost_cap) return std::nullopt;
    throw ValidationError("solve_exact_dp: no covering exists");  // unreachable after load checks
}

/// Brute-force oracle: enumerates every sequence of distinct edges.
/// Repetitions never pay (their residuals are empty), so distinct sequences
/// suffice. Intentionally simple; guarded to small edge counts.
inline SolveResult solve_exact_perm(const OcpInstance& inst, const SolveOptions& opts = {}) {
    if (inst.edge_count() > opts.max_perm_edges)
        throw GuardError("solve_exact_perm: edge count exceeds guard");
    if (inst.coverage_infeasible())
        throw ValidationError("solve_exact_perm: edges cannot cover the required labels");

    const CoverSet required = detail::required_mask(inst);
    SolveStats stats;
    std::optional<BigCost> best;
    std::vector<std::size_t> best_seq;
    std::vector<std::size_t> seq;
    std::vector<char> used(inst.edge_count(), 0);

    auto dfs = [&](auto&& self, const CoverSet& covered, const BigCost& cost) -> void {
        ++stats.nodes;
        if (covered.contains(required)) {
            if (!best || cost < *best) {
                best = cost;
                best_seq = seq;
            }
            return;
        }
        if (best && cost >= *best) return;  // suffix monotonicity
        for (std::size_t e = 0; e < inst.edge_count(); ++e) {
            if (used[e]) continue;
            std::uint64_t u = detail::marginal_weight(inst, covered, e);
            CoverSet next = covered;
            for (std::size_t x : inst.edge(e).elements) next.set(x);
            used[e] = 1;
            seq.push_back(e);
            self(self, next, u > 0 ? cost + BigCost::pow2(u) : cost);
            seq.pop_back();
            used[e] = 0;
        }
    };
    dfs(dfs, CoverSet(inst.universe_size()), BigCost::zero());

    SolveResult res;
    res.covering.sequence = std::move(best_seq);
    res.cost = std::move(*best);
    res.optimal = true;
    res.stats = stats;
    return res;
}

/// Admissible bound on the remaining cost: every uncovered required label x
/// must land in some future residual set, which then weighs at least val(x).
inline BigCost bnb_lower_bound(const OcpInstance& inst, const CoverSet& covered) {
    std::uint64_t max_val = 0;
    for (std::size_t i = 0; i < inst.required_count(); ++i)
        if (!covered.test(i)) max_val = std::max(max_val, inst.element(i).weight);
    return max_val > 0 ? BigCost::pow2(max_val) : BigCost::zero();
}

/// Branch and bound, incumbent seeded by the greedy heuristic. Children are
/// explored in ascending marginal-cost order.
inline SolveResult solve_bnb(const OcpInstance& inst) {
    if (inst.coverage_infeasible())
        throw ValidationError("solve_bnb: edges cannot cover the required labels");

    SolveResult incumbent = solve_greedy(inst);
    incumbent.covering = normalize_covering(inst, incumbent.covering);
    const CoverSet required = detail::required_mask(inst);
    SolveStats stats;

    std::vector<std::size_t> seq;
    auto dfs = [&](auto&& self, const CoverSet& covered, const BigCost& cost) -> void {
        ++stats.nodes;
        if (covered.contains(required)) {
            if (cost < incumbent.cost) {
                incumbent.cost = cost;
                incumbent.covering.sequence = seq;
            }
            return;
        }
        if (cost + bnb_lower_bound(inst, covered) >= incumbent.cost) return;

        std::vector<std::pair<std::uint64_t, std::size_t>> children;
        for (std::size_t e = 0; e < inst.edge_count(); ++e) {
            std::uint64_t u = detail::marginal_weight(inst, covered, e);
            if (u > 0) children.emplace_back(u, e);
        }
        std::sort(children.begin(), children.end());
        for (auto [u, e] : children) {
            if (cost + BigCost::pow2(u) >= incumbent.cost) break;  // children are sorted
            CoverSet next = covered;
            for (std::size_t x : inst.edge(e).elements) next.set(x);
            seq.push_back(e);
            self(self, next, cost + BigCost::pow2(u));
            seq.pop_back();
        }
    };
    dfs(dfs, CoverSet(inst.universe_size()), BigCost::zero());

    incumbent.optimal = true;
    incumbent.stats = stats;
    return incumbent;
}

} // namespace ocp

#endif
