#ifndef OCP_INSTANCE_HPP
#define OCP_INSTANCE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ocp/cost.hpp"
#include "ocp/errors.hpp"

namespace ocp {

/// An element of the universe: a required label or an auxiliary token.
struct Element {
    std::string id;
    std::uint64_t weight = 0;  // val(x), always >= 1
};

struct Edge {
    std::string id;
    std::vector<std::size_t> elements;  // indices into the universe, sorted, distinct
};

/// A weighted ordered-covering instance. Immutable after build().
///
/// The universe holds every element appearing in any edge; the first
/// `required_count` elements are the labels that must be covered. Auxiliary
/// tokens contribute cost but carry no coverage obligation.
class OcpInstance {
public:
    /// Builder input, close to the file format.
    struct Spec {
        std::vector<Element> labels;          // required, declaration order = S order
        std::vector<Element> extra_elements;  // auxiliary tokens
        struct EdgeSpec {
            std::string id;
            std::vector<std::string> elements;
        };
        std::vector<EdgeSpec> edges;
        std::optional<BigCost> budget;
        bool allow_uncovered = false;  // reduced instances with no valid triplet
    };

    static OcpInstance build(Spec spec) {
        OcpInstance inst;
        inst.required_count_ = spec.labels.size();
        for (auto& e : spec.labels) inst.add_element(std::move(e));
        for (auto& e : spec.extra_elements) inst.add_element(std::move(e));
        for (auto& es : spec.edges) {
            Edge edge;
            edge.id = es.id;
            if (es.elements.empty())
                throw ValidationError("edge '" + es.id + "' is empty");
            if (!inst.edge_index_.emplace(es.id, inst.edges_.size()).second)
                throw ValidationError("duplicate edge id '" + es.id + "'");
            for (const auto& el : es.elements) {
                auto it = inst.element_index_.find(el);
                if (it == inst.element_index_.end())
                    throw ValidationError("edge '" + es.id + "' uses unknown element '" + el + "'");
                edge.elements.push_back(it->second);
            }
            std::sort(edge.elements.begin(), edge.elements.end());
            if (std::adjacent_find(edge.elements.begin(), edge.elements.end()) != edge.elements.end())
                throw ValidationError("edge '" + es.id + "' repeats an element");
            inst.edges_.push_back(std::move(edge));
        }
        inst.budget_ = std::move(spec.budget);

        std::vector<char> covered(inst.universe_.size(), 0);
        for (const auto& e : inst.edges_)
            for (std::size_t x : e.elements) covered[x] = 1;
        for (std::size_t i = 0; i < inst.required_count_; ++i) {
            if (!covered[i]) {
                if (spec.allow_uncovered) {
                    inst.coverage_infeasible_ = true;
                    break;
                }
                throw ValidationError("required label '" + inst.universe_[i].id +
                                      "' is not covered by any edge");
            }
        }
        return inst;
    }

    std::size_t universe_size() const { return universe_.size(); }
    std::size_t required_count() const { return required_count_; }
    const Element& element(std::size_t i) const { return universe_[i]; }
    const std::vector<Element>& universe() const { return universe_; }

    std::size_t edge_count() const { return edges_.size(); }
    const Edge& edge(std::size_t i) const { return edges_[i]; }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::optional<BigCost>& budget() const { return budget_; }

    /// True when the edges cannot cover S (only possible for instances built
    /// with allow_uncovered, i.e. reductions with an empty triplet set).
    bool coverage_infeasible() const { return coverage_infeasible_; }

    std::optional<std::size_t> find_edge(const std::string& id) const {
        auto it = edge_index_.find(id);
        if (it == edge_index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> find_element(const std::string& id) const {
        auto it = element_index_.find(id);
        if (it == element_index_.end()) return std::nullopt;
        return it->second;
    }

private:
    void add_element(Element e) {
        if (e.weight < 1)
            throw ValidationError("element '" + e.id + "' has non-positive weight");
        if (!element_index_.emplace(e.id, universe_.size()).second)
            throw ValidationError("duplicate element id '" + e.id + "'");
        universe_.push_back(std::move(e));
    }

    std::vector<Element> universe_;  // required labels first
    std::size_t required_count_ = 0;
    std::vector<Edge> edges_;
    std::optional<BigCost> budget_;
    bool coverage_infeasible_ = false;
    std::unordered_map<std::string, std::size_t> element_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
};

/// An ordered sequence of edge indices; repetitions permitted.
struct Covering {
    std::vector<std::size_t> sequence;
};

/// Resolves a sequence of edge ids against an instance.
inline Covering make_covering(const OcpInstance& inst, const std::vector<std::string>& edge_ids) {
    Covering c;
    c.sequence.reserve(edge_ids.size());
    for (const auto& id : edge_ids) {
        auto idx = inst.find_edge(id);
        if (!idx) throw ValidationError("covering references unknown edge '" + id + "'");
        c.sequence.push_back(*idx);
    }
    return c;
}

} // namespace ocp

#endif
