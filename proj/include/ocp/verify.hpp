#ifndef OCP_VERIFY_HPP
#define OCP_VERIFY_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "ocp/cost.hpp"
#include "ocp/evaluate.hpp"
#include "ocp/instance.hpp"

namespace ocp {

enum class VerdictReason {
    Accepted,
    NotACovering,
    BudgetExceeded,
    OversizedExponent,
    MalformedCertificate,
};

struct Verdict {
    bool accepted = false;
    VerdictReason reason = VerdictReason::MalformedCertificate;
};

inline std::string_view to_string(VerdictReason r) {
    switch (r) {
        case VerdictReason::Accepted: return "accepted";
        case VerdictReason::NotACovering: return "not-a-covering";
        case VerdictReason::BudgetExceeded: return "budget-exceeded";
        case VerdictReason::OversizedExponent: return "oversized-exponent";
        case VerdictReason::MalformedCertificate: return "malformed-certificate";
    }
    return "?";
}

/// Polynomial-time certificate check against the instance budget.
///
/// Any step whose residual weight exceeds floor(log2 C) already costs more
/// than the whole budget, so it is rejected before 2^{u_i} is ever formed.
/// Residual weights can therefore be astronomically large without affecting
/// the running time; accumulated terms all have exponent <= floor(log2 C).
inline Verdict verify_certificate(const OcpInstance& inst, const Covering& covering) {
    if (!inst.budget())
        throw ConfigError("verify_certificate: instance has no budget");
    const BigCost& budget = *inst.budget();

    for (std::size_t e : covering.sequence)
        if (e >= inst.edge_count()) return {false, VerdictReason::MalformedCertificate};

    if (!covers(inst, covering)) return {false, VerdictReason::NotACovering};

    if (budget.is_zero()) {
        // a covering always pays at least 2^1 somewhere, S being nonempty
        return inst.required_count() == 0 ? Verdict{true, VerdictReason::Accepted}
                                          : Verdict{false, VerdictReason::BudgetExceeded};
    }
    const std::uint64_t log2_budget = budget.max_exponent();

    std::vector<char> seen(inst.universe_size(), 0);
    BigCost accumulated;
    for (std::size_t e : covering.sequence) {
        std::uint64_t u = 0;
        for (std::size_t x : inst.edge(e).elements) {
            if (seen[x]) continue;
            seen[x] = 1;
            u += inst.element(x).weight;
        }
        if (u == 0) continue;
        if (u > log2_budget) return {false, VerdictReason::OversizedExponent};
        accumulated += BigCost::pow2(u);
        if (accumulated > budget) return {false, VerdictReason::BudgetExceeded};
    }
    return {true, VerdictReason::Accepted};
}

} // namespace ocp

#endif
