#ifndef OCP_MAP_IO_HPP
#define OCP_MAP_IO_HPP

#include <sstream>
#include <string>

#include "ocp/io.hpp"
#include "ocp/reduction.hpp"

// Text format for reduction maps (.map):
//   map 1 / m <m> / B <B> / t <t> / w <w> / triplet l1 l2 l3 ... / infeasible
// Triplet records appear in enumeration order (j = 1, 2, ...). Edge keys are
// not stored; they are rebuilt from the deterministic edge id scheme.

namespace ocp {

inline std::string serialize_reduction_map(const ReductionMap& map) {
    std::ostringstream out;
    out << "map 1\n"
        << "m " << map.m << '\n'
        << "B " << map.target << '\n'
        << "t " << map.closing_weight << '\n'
        << "w " << map.opening_weight << '\n';
    for (const auto& t : map.triplet_index)
        out << "triplet " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    if (map.infeasible) out << "infeasible\n";
    return out.str();
}

/// Parses a .map document. Edge keys are left empty; see attach_edge_keys.
inline ReductionMap parse_reduction_map(const std::string& text) {
    using namespace io_detail;
    auto lines = tokenize(text);
    expect_header(lines, "map");
    ReductionMap map;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "m" && t.size() == 2) map.m = parse_uint(line, t[1]);
        else if (t[0] == "B" && t.size() == 2) map.target = parse_uint(line, t[1]);
        else if (t[0] == "t" && t.size() == 2) map.closing_weight = parse_uint(line, t[1]);
        else if (t[0] == "w" && t.size() == 2) map.opening_weight = parse_uint(line, t[1]);
        else if (t[0] == "triplet" && t.size() == 4)
            map.triplet_index.push_back({static_cast<std::size_t>(parse_uint(line, t[1])),
                                         static_cast<std::size_t>(parse_uint(line, t[2])),
                                         static_cast<std::size_t>(parse_uint(line, t[3]))});
        else if (t[0] == "infeasible" && t.size() == 1) map.infeasible = true;
        else fail(line.number, "unknown or malformed record '" + t[0] + "'");
    }
    return map;
}

/// Rebuilds the per-edge keys of a loaded map from the instance's edge ids
/// ("A_<i>_<j>" opening, "E_<i>_<j>" assignment).
inline void attach_edge_keys(ReductionMap& map, const OcpInstance& inst) {
    map.edge_keys.clear();
    for (const Edge& edge : inst.edges()) {
        GadgetKind kind;
        if (edge.id.rfind("A_", 0) == 0) kind = GadgetKind::Opening;
        else if (edge.id.rfind("E_", 0) == 0) kind = GadgetKind::Assignment;
        else throw ParseError("edge id '" + edge.id + "' is not a reduction gadget id");
        auto sep = edge.id.find('_', 2);
        if (sep == std::string::npos)
            throw ParseError("edge id '" + edge.id + "' is not a reduction gadget id");
        try {
            std::size_t bin = std::stoull(edge.id.substr(2, sep - 2));
            std::size_t triplet = std::stoull(edge.id.substr(sep + 1));
            if (bin < 1 || bin > map.m || triplet < 1 || triplet > map.triplet_index.size())
                throw ParseError("edge id '" + edge.id + "' is out of the map's range");
            map.edge_keys.push_back({kind, bin, triplet});
        } catch (const std::invalid_argument&) {
            throw ParseError("edge id '" + edge.id + "' is not a reduction gadget id");
        }
    }
}

/// Reconstructs the source 3-Partition instance from a reduced OCP instance
/// and its map: label weights are the a-values in declaration order.
inline ThreePartitionInstance source_3p(const ReductionMap& map, const OcpInstance& inst) {
    ThreePartitionInstance tp;
    tp.m = map.m;
    tp.target = map.target;
    for (std::size_t i = 0; i < inst.required_count(); ++i)
        tp.a.push_back(inst.element(i).weight);
    return tp;
}

} // namespace ocp

#endif
