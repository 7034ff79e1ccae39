#ifndef OCP_THREE_PARTITION_HPP
#define OCP_THREE_PARTITION_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ocp/errors.hpp"

namespace ocp {

/// A 3-Partition instance: 3m positive integers a_1..a_3m, bin target B.
/// Indices are 1-based throughout to match the usual statement.
struct ThreePartitionInstance {
    std::uint64_t m = 0;
    std::uint64_t target = 0;        // B
    std::vector<std::uint64_t> a;    // |a| = 3m, a[k] is a_{k+1}
};

/// A candidate answer: m index triples (1-based, each sorted ascending).
struct Partition3 {
    std::vector<std::array<std::size_t, 3>> triplets;
};

/// Checks every defining constraint; returns one message per violation.
inline std::vector<std::string> validate_3p(const ThreePartitionInstance& tp) {
    std::vector<std::string> violations;
    if (tp.m == 0) violations.push_back("m must be positive");
    if (tp.target == 0) violations.push_back("B must be positive");
    if (tp.a.size() != 3 * tp.m)
        violations.push_back("expected " + std::to_string(3 * tp.m) + " values, got " +
                             std::to_string(tp.a.size()));
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < tp.a.size(); ++k) {
        std::uint64_t v = tp.a[k];
        sum += v;
        // B/4 < a_i < B/2, strict, checked in integers: 4v > B and 2v < B
        if (!(4 * v > tp.target && 2 * v < tp.target))
            violations.push_back("a_" + std::to_string(k + 1) + " = " + std::to_string(v) +
                                 " outside (B/4, B/2)");
    }
    if (tp.a.size() == 3 * tp.m && sum != tp.m * tp.target)
        violations.push_back("sum " + std::to_string(sum) + " != m*B = " +
                             std::to_string(tp.m * tp.target));
    return violations;
}

/// True iff `p` is a correct 3-partition of `tp`: m disjoint index triples
/// covering {1..3m}, each summing to B.
inline bool is_valid_partition(const ThreePartitionInstance& tp, const Partition3& p) {
    if (p.triplets.size() != tp.m) return false;
    std::vector<char> used(tp.a.size() + 1, 0);
    for (const auto& t : p.triplets) {
        std::uint64_t sum = 0;
        for (std::size_t idx : t) {
            if (idx < 1 || idx > tp.a.size() || used[idx]) return false;
            used[idx] = 1;
            sum += tp.a[idx - 1];
        }
        if (sum != tp.target) return false;
    }
    return true;
}

/// Backtracking oracle over perfect triple matchings: the lowest unassigned
/// index anchors each branch, so every partition is generated once.
inline std::optional<Partition3> solve_3p_bruteforce(const ThreePartitionInstance& tp,
                                                     std::uint64_t max_m = 4) {
    if (tp.m > max_m)
        throw GuardError("solve_3p_bruteforce: m exceeds guard");
    const std::size_t n = tp.a.size();
    std::vector<char> used(n + 1, 0);
    Partition3 result;

    auto dfs = [&](auto&& self) -> bool {
        std::size_t lo = 1;
        while (lo <= n && used[lo]) ++lo;
        if (lo > n) return true;
        used[lo] = 1;
        for (std::size_t i = lo + 1; i <= n; ++i) {
            if (used[i]) continue;
            used[i] = 1;
            for (std::size_t j = i + 1; j <= n; ++j) {
                if (used[j]) continue;
                if (tp.a[lo - 1] + tp.a[i - 1] + tp.a[j - 1] != tp.target) continue;
                used[j] = 1;
                result.triplets.push_back({lo, i, j});
                if (self(self)) return true;
                result.triplets.pop_back();
                used[j] = 0;
            }
            used[i] = 0;
        }
        used[lo] = 0;
        return false;
    };
    if (dfs(dfs)) return result;
    return std::nullopt;
}

} // namespace ocp

#endif
