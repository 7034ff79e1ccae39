#ifndef OCP_EVALUATE_HPP
#define OCP_EVALUATE_HPP

#include <cstdint>
#include <vector>

#include "ocp/cost.hpp"
#include "ocp/instance.hpp"

namespace ocp {

/// One step of a covering evaluation: the elements covered for the first
/// time at this position, their total weight, and the resulting partial cost.
struct TraceStep {
    std::size_t edge;                   // edge index in the instance
    std::vector<std::size_t> residual;  // element indices, sorted
    std::uint64_t residual_weight;      // u_i
    BigCost partial_cost;               // 2^{u_i}, or 0 when u_i = 0
};

struct ResidualTrace {
    std::vector<TraceStep> steps;
};

/// Evaluates a covering step by step. Each element lands in the residual set
/// of the first edge that contains it; later occurrences contribute nothing.
inline ResidualTrace residual_trace(const OcpInstance& inst, const Covering& covering) {
    std::vector<char> seen(inst.universe_size(), 0);
    ResidualTrace trace;
    trace.steps.reserve(covering.sequence.size());
    for (std::size_t e : covering.sequence) {
        TraceStep step;
        step.edge = e;
        step.residual_weight = 0;
        for (std::size_t x : inst.edge(e).elements) {
            if (seen[x]) continue;
            seen[x] = 1;
            step.residual.push_back(x);
            step.residual_weight += inst.element(x).weight;
        }
        step.partial_cost =
            step.residual_weight > 0 ? BigCost::pow2(step.residual_weight) : BigCost::zero();
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

inline BigCost total_cost(const ResidualTrace& trace) {
    BigCost sum;
    for (const auto& step : trace.steps) sum += step.partial_cost;
    return sum;
}

/// True iff the union of the sequence's edges contains every required label.
inline bool covers(const OcpInstance& inst, const Covering& covering) {
    std::vector<char> seen(inst.universe_size(), 0);
    for (std::size_t e : covering.sequence)
        for (std::size_t x : inst.edge(e).elements) seen[x] = 1;
    for (std::size_t i = 0; i < inst.required_count(); ++i)
        if (!seen[i]) return false;
    return true;
}

/// Drops zero-residual steps. Trace and total cost of the result are
/// identical to the input's restricted to nonempty steps, and no edge
/// appears twice afterwards.
inline Covering normalize_covering(const OcpInstance& inst, const Covering& covering) {
    if (!covers(inst, covering))
        throw ValidationError("normalize_covering: sequence does not cover the required labels");
    ResidualTrace trace = residual_trace(inst, covering);
    Covering out;
    for (const auto& step : trace.steps)
        if (!step.residual.empty()) out.sequence.push_back(step.edge);
    return out;
}

} // namespace ocp

#endif
