// ocp: command line front end for the ordered covering toolkit.
//
// Exit codes: 0 ok, 1 internal error, 2 parse error, 3 validation error,
// 4 solver guard exceeded, 5 certificate rejected.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ocp/ocp.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitGuard = 4;
constexpr int kExitRejected = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ocp::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ocp::OcpError("cannot write '" + path + "'");
    out << content;
}

ocp::SolveOptions options_from_env() {
    ocp::SolveOptions opts;
    if (const char* v = std::getenv("OCP_MAX_UNIVERSE")) opts.max_universe = std::stoull(v);
    if (const char* v = std::getenv("OCP_MAX_STATES")) opts.max_states = std::stoull(v);
    if (const char* v = std::getenv("OCP_MAX_PERM_EDGES")) opts.max_perm_edges = std::stoull(v);
    return opts;
}

ocp::OcpInstance load_instance(const std::string& path) {
    return ocp::parse_instance(read_file(path));
}

ocp::Covering load_covering(const ocp::OcpInstance& inst, const std::string& path) {
    auto doc = ocp::parse_covering(read_file(path));
    return ocp::make_covering(inst, doc.steps);
}

void print_trace(const ocp::OcpInstance& inst, const ocp::ResidualTrace& trace, bool records) {
    for (const auto& step : trace.steps) {
        if (records) {
            std::cout << "step " << inst.edge(step.edge).id << " u=" << step.residual_weight;
            for (std::size_t x : step.residual) std::cout << ' ' << inst.element(x).id;
            std::cout << '\n';
        } else {
            std::cout << "  " << inst.edge(step.edge).id << ": residual {";
            for (std::size_t k = 0; k < step.residual.size(); ++k)
                std::cout << (k ? ", " : "") << inst.element(step.residual[k]).id;
            std::cout << "}, u = " << step.residual_weight << ", cost "
                      << step.partial_cost.to_decimal() << '\n';
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Ordered covering toolkit: evaluate, verify, solve, reduce"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text|records")
        ->check(CLI::IsMember({"text", "records"}));
    ocp::SolveOptions opts = options_from_env();

    // eval
    std::string eval_instance, eval_covering;
    auto* eval = app.add_subcommand("eval", "print the residual trace and total cost");
    eval->add_option("instance", eval_instance)->required();
    eval->add_option("covering", eval_covering)->required();

    // verify
    std::string ver_instance, ver_covering;
    auto* verify = app.add_subcommand("verify", "check a certificate against the budget");
    verify->add_option("instance", ver_instance)->required();
    verify->add_option("covering", ver_covering)->required();

    // solve
    std::string solve_instance, solve_method = "dp", solve_out;
    auto* solve = app.add_subcommand("solve", "solve an instance");
    solve->add_option("instance", solve_instance)->required();
    solve->add_option("--method", solve_method, "greedy|dp|perm|bnb")
        ->check(CLI::IsMember({"greedy", "dp", "perm", "bnb"}));
    solve->add_option("--max-universe", opts.max_universe, "state-space guard for dp");
    solve->add_option("-o,--out", solve_out, "write the covering to this .cov file");

    // reduce
    std::string red_input, red_prefix;
    auto* reduce = app.add_subcommand("reduce", "map a 3-Partition instance to OCP");
    reduce->add_option("input", red_input)->required();
    reduce->add_option("-o,--out", red_prefix, "output prefix (default: input without extension)");

    // extract
    std::string ext_map, ext_instance, ext_covering, ext_out;
    auto* extract = app.add_subcommand("extract", "read a 3-partition off a feasible covering");
    extract->add_option("map", ext_map)->required();
    extract->add_option("instance", ext_instance)->required();
    extract->add_option("covering", ext_covering)->required();
    extract->add_option("-o,--out", ext_out, "write the partition to this file");

    // check3p
    std::string chk_input;
    auto* check3p = app.add_subcommand("check3p", "validate a 3-Partition instance");
    check3p->add_option("input", chk_input)->required();

    // gen
    std::string gen_family, gen_out;
    ocp::GenParams gp;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("family", gen_family, "random-ocp|planted-3p|unconstrained-3p")
        ->required()
        ->check(CLI::IsMember({"random-ocp", "planted-3p", "unconstrained-3p"}));
    gen->add_option("--seed", gp.seed);
    gen->add_option("--labels", gp.labels);
    gen->add_option("--edges", gp.edges);
    gen->add_option("--max-weight", gp.max_weight);
    gen->add_option("--m", gp.m);
    gen->add_option("--B", gp.target);
    gen->add_option("-o,--out", gen_out, "output file (default: stdout)");

    // gap
    std::string gap_dir;
    auto* gap = app.add_subcommand("gap", "greedy vs optimal over a directory of .ocp files");
    gap->add_option("dir", gap_dir)->required();
    gap->add_option("--max-universe", opts.max_universe);

    // let --format (and other global flags) appear after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    const bool records = format == "records";

    if (*eval) {
        auto inst = load_instance(eval_instance);
        auto cov = load_covering(inst, eval_covering);
        auto trace = ocp::residual_trace(inst, cov);
        print_trace(inst, trace, records);
        std::cout << (records ? "cost " : "total cost ") << ocp::total_cost(trace).to_decimal()
                  << '\n';
        return 0;
    }

    if (*verify) {
        auto inst = load_instance(ver_instance);
        auto cov = load_covering(inst, ver_covering);
        auto verdict = ocp::verify_certificate(inst, cov);
        std::cout << ocp::to_string(verdict.reason) << '\n';
        return verdict.accepted ? 0 : kExitRejected;
    }

    if (*solve) {
        auto inst = load_instance(solve_instance);
        ocp::SolveResult res;
        if (solve_method == "greedy") res = ocp::solve_greedy(inst);
        else if (solve_method == "dp") res = *ocp::solve_exact_dp(inst, opts);
        else if (solve_method == "perm") res = ocp::solve_exact_perm(inst, opts);
        else res = ocp::solve_bnb(inst);

        if (records) {
            std::cout << "cost " << res.cost.to_decimal() << "\nsequence";
            for (std::size_t e : res.covering.sequence) std::cout << ' ' << inst.edge(e).id;
            std::cout << "\noptimal " << (res.optimal ? 1 : 0) << '\n';
        } else {
            std::cout << "cost " << res.cost.to_decimal() << (res.optimal ? " (optimal)" : "")
                      << "\nsequence:";
            for (std::size_t e : res.covering.sequence) std::cout << ' ' << inst.edge(e).id;
            std::cout << '\n';
        }
        if (!solve_out.empty()) {
            auto doc = ocp::covering_document(inst, res.covering, solve_instance);
            write_file(solve_out, ocp::serialize_covering(doc));
        }
        return 0;
    }

    if (*reduce) {
        auto tp = ocp::parse_3p(read_file(red_input));
        auto reduced = ocp::reduce_3p_to_ocp(tp);
        std::string prefix = red_prefix.empty()
                                 ? std::filesystem::path(red_input).replace_extension().string()
                                 : red_prefix;
        write_file(prefix + ".ocp", ocp::serialize_instance(reduced.instance));
        write_file(prefix + ".map", ocp::serialize_reduction_map(reduced.map));
        std::cout << "wrote " << prefix << ".ocp and " << prefix << ".map ("
                  << reduced.map.triplet_index.size() << " valid triplets, "
                  << reduced.instance.edge_count() << " edges)"
                  << (reduced.map.infeasible ? " [infeasible]" : "") << '\n';
        return 0;
    }

    if (*extract) {
        auto inst = load_instance(ext_instance);
        auto map = ocp::parse_reduction_map(read_file(ext_map));
        ocp::attach_edge_keys(map, inst);
        auto cov = load_covering(inst, ext_covering);
        auto tp = ocp::source_3p(map, inst);
        ocp::ReducedInstance reduced{std::move(inst), std::move(map)};
        auto partition = ocp::extract_partition(reduced, cov, tp);
        std::string out = ocp::serialize_partition(partition);
        if (ext_out.empty()) std::cout << out;
        else write_file(ext_out, out);
        return 0;
    }

    if (*check3p) {
        auto tp = ocp::parse_3p(read_file(chk_input));
        auto violations = ocp::validate_3p(tp);
        if (violations.empty()) {
            std::cout << "valid\n";
            return 0;
        }
        for (const auto& v : violations) std::cout << "violation: " << v << '\n';
        return kExitValidation;
    }

    if (*gen) {
        std::string out;
        if (gen_family == "random-ocp") out = ocp::serialize_instance(ocp::gen_random_ocp(gp));
        else if (gen_family == "planted-3p") out = ocp::serialize_3p(ocp::gen_planted_3p(gp));
        else out = ocp::serialize_3p(ocp::gen_unconstrained_3p(gp));
        if (gen_out.empty()) std::cout << out;
        else write_file(gen_out, out);
        return 0;
    }

    if (*gap) {
        std::vector<std::pair<std::string, ocp::OcpInstance>> batch;
        std::vector<std::filesystem::path> paths;
        for (const auto& entry : std::filesystem::directory_iterator(gap_dir))
            if (entry.path().extension() == ".ocp") paths.push_back(entry.path());
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths)
            batch.emplace_back(p.filename().string(), load_instance(p.string()));

        auto report = ocp::run_gap_experiment(batch, opts);
        for (const auto& row : report.rows) {
            if (!row.ok()) {
                std::cout << (records ? "row " : "") << row.id << " error " << row.error << '\n';
                continue;
            }
            if (records)
                std::cout << "row " << row.id << ' ' << row.greedy_cost->to_decimal() << ' '
                          << row.optimal_cost->to_decimal() << ' ' << row.log2_ratio() << '\n';
            else
                std::cout << row.id << ": greedy " << row.greedy_cost->to_decimal() << ", optimal "
                          << row.optimal_cost->to_decimal() << ", ratio "
                          << row.greedy_cost->to_decimal() << '/' << row.optimal_cost->to_decimal()
                          << " (log2 diff " << row.log2_ratio() << ")\n";
        }
        if (report.solved() == 0)
            std::cout << "aggregate: n/a (no solved rows)\n";
        else
            std::cout << "aggregate: " << report.solved() << " rows, mean ratio "
                      << report.mean_ratio() << ", max ratio " << report.max_ratio() << '\n';
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ocp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ocp::GuardError& e) {
        std::cerr << "guard error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const ocp::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ocp::OcpError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
