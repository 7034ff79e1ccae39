#ifndef OCP_IO_HPP
#define OCP_IO_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "ocp/cost.hpp"
#include "ocp/errors.hpp"
#include "ocp/instance.hpp"
#include "ocp/three_partition.hpp"

// Line-based text formats. One record per line, '#' starts a comment,
// blank lines are ignored. See README for the grammar.
//
//   .ocp   ocp 1 / label id w / elem id w / edge id e1 e2... /
//          budget <decimal> | budget exp e1 e2... / infeasible
//   .cov   cov 1 / instance <ref> / step <edge-id>
//   .3p    3p 1 / m <m> / B <B> / a v1 ... v3m
//
// The canonical serializer emits records in declaration order with
// single-space separators, budgets in exponent-list form.

namespace ocp {

struct CoveringDocument {
    std::string instance_ref;  // optional, informational
    std::vector<std::string> steps;
};

namespace io_detail {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

inline std::uint64_t parse_uint(const Line& line, const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail(line.number, "expected a nonnegative integer, got '" + tok + "'");
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range&) {
        fail(line.number, "integer out of range: '" + tok + "'");
    }
}

inline void expect_header(const std::vector<Line>& lines, const std::string& magic) {
    if (lines.empty()) throw ParseError("empty document");
    const Line& h = lines.front();
    if (h.tokens.size() != 2 || h.tokens[0] != magic || h.tokens[1] != "1")
        fail(h.number, "expected header '" + magic + " 1'");
}

} // namespace io_detail

inline OcpInstance parse_instance(const std::string& text) {
    using namespace io_detail;
    auto lines = tokenize(text);
    expect_header(lines, "ocp");

    OcpInstance::Spec spec;
    bool saw_budget = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "label" || t[0] == "elem") {
            if (t.size() != 3) fail(line.number, "expected '" + t[0] + " <id> <weight>'");
            Element e{t[1], parse_uint(line, t[2])};
            if (e.weight == 0) fail(line.number, "element '" + e.id + "' has non-positive weight");
            (t[0] == "label" ? spec.labels : spec.extra_elements).push_back(std::move(e));
        } else if (t[0] == "edge") {
            if (t.size() < 3) fail(line.number, "edge needs an id and at least one element");
            OcpInstance::Spec::EdgeSpec es;
            es.id = t[1];
            es.elements.assign(t.begin() + 2, t.end());
            spec.edges.push_back(std::move(es));
        } else if (t[0] == "budget") {
            if (saw_budget) fail(line.number, "duplicate budget");
            saw_budget = true;
            if (t.size() >= 2 && t[1] == "exp") {
                std::vector<std::uint64_t> exps;
                for (std::size_t k = 2; k < t.size(); ++k) exps.push_back(parse_uint(line, t[k]));
                spec.budget = BigCost::from_exponents(std::move(exps));
            } else if (t.size() == 2) {
                try {
                    spec.budget = BigCost::from_decimal(t[1]);
                } catch (const std::invalid_argument&) {
                    fail(line.number, "malformed budget '" + t[1] + "'");
                }
            } else {
                fail(line.number, "expected 'budget <decimal>' or 'budget exp <e>...'");
            }
        } else if (t[0] == "infeasible") {
            if (t.size() != 1) fail(line.number, "unexpected tokens after 'infeasible'");
            spec.allow_uncovered = true;
        } else {
            fail(line.number, "unknown record '" + t[0] + "'");
        }
    }
    return OcpInstance::build(std::move(spec));
}

inline std::string serialize_instance(const OcpInstance& inst) {
    std::ostringstream out;
    out << "ocp 1\n";
    for (std::size_t i = 0; i < inst.universe_size(); ++i) {
        const Element& e = inst.element(i);
        out << (i < inst.required_count() ? "label " : "elem ") << e.id << ' ' << e.weight << '\n';
    }
    for (const Edge& edge : inst.edges()) {
        out << "edge " << edge.id;
        for (std::size_t x : edge.elements) out << ' ' << inst.element(x).id;
        out << '\n';
    }
    if (inst.budget()) {
        out << "budget exp";
        for (std::uint64_t e : inst.budget()->exponents()) out << ' ' << e;
        out << '\n';
    }
    if (inst.coverage_infeasible()) out << "infeasible\n";
    return out.str();
}

inline CoveringDocument parse_covering(const std::string& text) {
    using namespace io_detail;
    auto lines = tokenize(text);
    expect_header(lines, "cov");
    CoveringDocument doc;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "instance") {
            if (t.size() != 2) fail(line.number, "expected 'instance <ref>'");
            doc.instance_ref = t[1];
        } else if (t[0] == "step") {
            if (t.size() != 2) fail(line.number, "expected 'step <edge-id>'");
            doc.steps.push_back(t[1]);
        } else {
            fail(line.number, "unknown record '" + t[0] + "'");
        }
    }
    return doc;
}

inline std::string serialize_covering(const CoveringDocument& doc) {
    std::ostringstream out;
    out << "cov 1\n";
    if (!doc.instance_ref.empty()) out << "instance " << doc.instance_ref << '\n';
    for (const auto& s : doc.steps) out << "step " << s << '\n';
    return out.str();
}

inline CoveringDocument covering_document(const OcpInstance& inst, const Covering& covering,
                                          const std::string& instance_ref = "") {
    CoveringDocument doc;
    doc.instance_ref = instance_ref;
    for (std::size_t e : covering.sequence) doc.steps.push_back(inst.edge(e).id);
    return doc;
}

inline ThreePartitionInstance parse_3p(const std::string& text) {
    using namespace io_detail;
    auto lines = tokenize(text);
    expect_header(lines, "3p");
    ThreePartitionInstance tp;
    bool saw_m = false, saw_b = false, saw_a = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "m" && t.size() == 2) {
            tp.m = parse_uint(line, t[1]);
            saw_m = true;
        } else if (t[0] == "B" && t.size() == 2) {
            tp.target = parse_uint(line, t[1]);
            saw_b = true;
        } else if (t[0] == "a" && t.size() >= 2) {
            for (std::size_t k = 1; k < t.size(); ++k) tp.a.push_back(parse_uint(line, t[k]));
            saw_a = true;
        } else {
            fail(line.number, "unknown or malformed record '" + t[0] + "'");
        }
    }
    if (!saw_m || !saw_b || !saw_a)
        throw ParseError("3p document must contain 'm', 'B' and 'a' records");
    return tp;
}

inline std::string serialize_3p(const ThreePartitionInstance& tp) {
    std::ostringstream out;
    out << "3p 1\nm " << tp.m << "\nB " << tp.target << "\na";
    for (std::uint64_t v : tp.a) out << ' ' << v;
    out << '\n';
    return out.str();
}

inline std::string serialize_partition(const Partition3& p) {
    std::ostringstream out;
    out << "partition 1\n";
    for (const auto& t : p.triplets)
        out << "triplet " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

/// The two instances from the motivating write-up, embedded for tests and
/// the CLI. Names: "testA", "testB".
inline OcpInstance load_fixture(const std::string& name) {
    if (name == "testA") {
        return parse_instance(
            "ocp 1\n"
            "label s1 8\nlabel s2 2\nlabel s3 4\nlabel s4 4\n"
            "label s5 2\nlabel s6 2\nlabel s7 4\n"
            "edge E1 s1 s2\n"
            "edge E2 s2 s3 s4 s5\n"
            "edge E3 s4 s5 s6 s7\n"
            "edge E4 s5 s6\n");
    }
    if (name == "testB") {
        return parse_instance(
            "ocp 1\n"
            "label s1 4\nlabel s2 2\nlabel s3 8\nlabel s4 2\nlabel s5 2\n"
            "edge E1 s1 s2\n"
            "edge E2 s2 s3 s4 s5\n"
            "edge E3 s3 s4\n"
            "edge E4 s4 s5\n");
    }
    throw ValidationError("unknown fixture '" + name + "'");
}

} // namespace ocp

#endif
