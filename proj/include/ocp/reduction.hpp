#ifndef OCP_REDUCTION_HPP
#define OCP_REDUCTION_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ocp/cost.hpp"
#include "ocp/errors.hpp"
#include "ocp/evaluate.hpp"
#include "ocp/instance.hpp"
#include "ocp/three_partition.hpp"
#include "ocp/verify.hpp"

namespace ocp {

/// All index triples {l1<l2<l3} with a_{l1}+a_{l2}+a_{l3} = B, lexicographic.
/// An empty result means the instance is trivially NO.
inline std::vector<std::array<std::size_t, 3>> enumerate_valid_triplets(
    const ThreePartitionInstance& tp) {
    std::vector<std::array<std::size_t, 3>> triplets;
    const std::size_t n = tp.a.size();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k)
                if (tp.a[i - 1] + tp.a[j - 1] + tp.a[k - 1] == tp.target)
                    triplets.push_back({i, j, k});
    return triplets;
}

enum class GadgetKind { Opening, Assignment };

/// Bookkeeping tying a reduced OCP instance back to its source 3-Partition
/// instance: the enumerated triplet table, parameters, and per-edge keys.
struct ReductionMap {
    std::vector<std::array<std::size_t, 3>> triplet_index;  // X_j, 1-based label indices
    std::uint64_t m = 0;
    std::uint64_t target = 0;       // B
    std::uint64_t closing_weight = 1;  // t
    std::uint64_t opening_weight = 0;  // w
    bool infeasible = false;        // no valid triplet; the instance cannot cover S

    struct EdgeKey {
        GadgetKind kind;
        std::size_t bin;      // i, 1-based
        std::size_t triplet;  // j, 1-based
    };
    std::vector<EdgeKey> edge_keys;  // parallel to the instance's edge list

    static std::string opening_id(std::size_t bin, std::size_t triplet) {
        return "A_" + std::to_string(bin) + "_" + std::to_string(triplet);
    }
    static std::string assignment_id(std::size_t bin, std::size_t triplet) {
        return "E_" + std::to_string(bin) + "_" + std::to_string(triplet);
    }
};

inline std::uint64_t ceil_log2(std::uint64_t m) {
    std::uint64_t v = 0;
    while ((std::uint64_t{1} << v) < m) ++v;
    return v;
}

struct ReducedInstance {
    OcpInstance instance;
    ReductionMap map;
};

/// Maps a 3-Partition instance to an OCP instance whose budget is met exactly
/// when a 3-partition exists. For each bin i and valid triplet X_j there is a
/// singleton opening edge {w_i_j} and an assignment edge X_j ∪ {w_i_j, t_i_j};
/// the opening-token weight is large enough that any structural violation
/// (extra opening, unopened assignment) blows the budget.
inline ReducedInstance reduce_3p_to_ocp(const ThreePartitionInstance& tp) {
    if (auto violations = validate_3p(tp); !violations.empty())
        throw ValidationError("reduce_3p_to_ocp: invalid 3-Partition instance: " + violations.front());

    ReductionMap map;
    map.triplet_index = enumerate_valid_triplets(tp);
    map.m = tp.m;
    map.target = tp.target;
    map.closing_weight = 1;
    map.opening_weight = map.closing_weight + tp.target + ceil_log2(tp.m) + 1;
    map.infeasible = map.triplet_index.empty();

    OcpInstance::Spec spec;
    for (std::size_t l = 1; l <= tp.a.size(); ++l)
        spec.labels.push_back({"a" + std::to_string(l), tp.a[l - 1]});

    const std::size_t nt = map.triplet_index.size();
    for (std::size_t i = 1; i <= tp.m; ++i) {
        for (std::size_t j = 1; j <= nt; ++j) {
            std::string suffix = std::to_string(i) + "_" + std::to_string(j);
            spec.extra_elements.push_back({"w_" + suffix, map.opening_weight});
            spec.extra_elements.push_back({"t_" + suffix, map.closing_weight});

            const auto& x = map.triplet_index[j - 1];
            OcpInstance::Spec::EdgeSpec opening{ReductionMap::opening_id(i, j), {"w_" + suffix}};
            OcpInstance::Spec::EdgeSpec assignment{ReductionMap::assignment_id(i, j),
                                                   {"a" + std::to_string(x[0]),
                                                    "a" + std::to_string(x[1]),
                                                    "a" + std::to_string(x[2]),
                                                    "w_" + suffix, "t_" + suffix}};
            spec.edges.push_back(std::move(opening));
            spec.edges.push_back(std::move(assignment));
            map.edge_keys.push_back({GadgetKind::Opening, i, j});
            map.edge_keys.push_back({GadgetKind::Assignment, i, j});
        }
    }

    // C = m * (2^w + 2^{t+B})
    BigCost budget;
    for (std::uint64_t i = 0; i < tp.m; ++i) {
        budget += BigCost::pow2(map.opening_weight);
        budget += BigCost::pow2(map.closing_weight + tp.target);
    }
    spec.budget = std::move(budget);
    spec.allow_uncovered = map.infeasible;

    return {OcpInstance::build(std::move(spec)), std::move(map)};
}

/// The alternating opening/assignment sequence built from a 3-partition;
/// it evaluates to residual weights (w, B+t, ..., w, B+t) and total cost C.
inline Covering canonical_covering(const ThreePartitionInstance& tp, const Partition3& partition,
                                   const ReducedInstance& reduced) {
    if (!is_valid_partition(tp, partition))
        throw ValidationError("canonical_covering: not a valid 3-partition");
    std::vector<std::string> ids;
    for (std::size_t i = 1; i <= partition.triplets.size(); ++i) {
        auto key = partition.triplets[i - 1];
        std::sort(key.begin(), key.end());
        std::size_t j = 0;
        for (std::size_t cand = 1; cand <= reduced.map.triplet_index.size(); ++cand) {
            if (reduced.map.triplet_index[cand - 1] == key) {
                j = cand;
                break;
            }
        }
        if (j == 0)
            throw OcpError("canonical_covering: triplet missing from the valid-triplet table");
        ids.push_back(ReductionMap::opening_id(i, j));
        ids.push_back(ReductionMap::assignment_id(i, j));
    }
    return make_covering(reduced.instance, ids);
}

/// Reads a 3-partition off a budget-feasible covering of a reduced instance:
/// the required labels first covered by each positive-residual assignment
/// edge form one triplet. The result is re-validated; a failure here means
/// the reduction itself is broken.
inline Partition3 extract_partition(const ReducedInstance& reduced, const Covering& covering,
                                    const ThreePartitionInstance& tp) {
    Verdict v = verify_certificate(reduced.instance, covering);
    if (!v.accepted)
        throw ValidationError(std::string("extract_partition: covering rejected (") +
                              std::string(to_string(v.reason)) + ")");

    ResidualTrace trace = residual_trace(reduced.instance, covering);
    Partition3 result;
    const std::size_t labels = reduced.instance.required_count();
    for (const auto& step : trace.steps) {
        if (reduced.map.edge_keys[step.edge].kind != GadgetKind::Assignment) continue;
        if (step.residual.empty()) continue;
        std::vector<std::size_t> contributed;
        for (std::size_t x : step.residual)
            if (x < labels) contributed.push_back(x + 1);  // universe order: labels first
        if (contributed.size() != 3)
            throw OcpError("extract_partition: assignment edge contributed " +
                           std::to_string(contributed.size()) + " labels, expected 3");
        result.triplets.push_back({contributed[0], contributed[1], contributed[2]});
    }

    if (!is_valid_partition(tp, result))
        throw OcpError("extract_partition: extracted structure is not a valid 3-partition");
    return result;
}

} // namespace ocp

#endif
