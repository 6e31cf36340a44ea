#pragma once

// Command-line front end. Verdicts are data: solve/verify/check-td exit 0
// whatever the answer; usage, parse, and budget refusals exit 2.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "formats.hpp"
#include "interval.hpp"
#include "mcc_reduction.hpp"
#include "oracle.hpp"
#include "reductions.hpp"
#include "tree_decomposition.hpp"
#include "treewidth_dp.hpp"
#include "vc_fpt.hpp"
#include "verification.hpp"

namespace mmds {

namespace detail {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

inline void print_solution(std::ostream& out, const Solution& s) {
    for (Vertex v : s.members) out << v << '\n';
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum Membership Dominating Set toolkit"};
    app.require_subcommand(1);

    std::string graph_path, td_path, solution_path, kind, input_path;
    std::string emit_td, emit_witness, emit_labels;
    std::string algo = "brute";
    int k = 1;
    int jobs = 1;
    int budget = 24;
    bool no_forcing = false;
    bool path_only = false;
    uint64_t seed = VerificationConfig{}.seed;

    auto* solve = app.add_subcommand("solve", "decide feasibility and print a witness");
    solve->add_option("--algo", algo, "brute | twdp | vcfpt")
        ->check(CLI::IsMember({"brute", "twdp", "vcfpt"}));
    solve->add_option("-k", k, "membership bound")->required()->check(CLI::PositiveNumber);
    solve->add_option("graph", graph_path, "instance in .gr format")->required();
    solve->add_option("--td", td_path, "externally supplied tree decomposition (twdp)");
    solve->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);
    solve->add_option("--budget", budget, "free-vertex budget for brute force");
    solve->add_flag("--no-forcing", no_forcing, "disable forcing preprocessing (brute)");

    auto* minimize = app.add_subcommand("minimize", "smallest feasible membership bound");
    minimize->add_option("graph", graph_path)->required();
    minimize->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    minimize->add_option("--budget", budget);
    minimize->add_flag("--no-forcing", no_forcing);

    auto* verify = app.add_subcommand("verify", "check a proposed solution");
    verify->add_option("-k", k)->required()->check(CLI::PositiveNumber);
    verify->add_option("--solution", solution_path, "one vertex id per line")->required();
    verify->add_option("graph", graph_path)->required();

    auto* igreedy = app.add_subcommand("interval-greedy", "dominating set of an interval set");
    igreedy->add_option("intervals", input_path)->required();

    auto* generate = app.add_subcommand("generate", "hardness-construction instance generators");
    generate->add_option("kind", kind, "pp1in3sat | mcc | mis-split | sat3")
        ->required()
        ->check(CLI::IsMember({"pp1in3sat", "mcc", "mis-split", "sat3"}));
    generate->add_option("input", input_path, "source instance (CNF or colored graph)")
        ->required();
    auto* gen_k = generate->add_option("-k", k, "membership parameter (sat3, mis-split)");
    generate->add_option("--emit-td", emit_td, "write a path decomposition (mcc)");
    generate->add_option("--emit-witness", emit_witness,
                         "write a witness solution when the source is a yes-instance");
    generate->add_option("--labels", emit_labels, "write vertex<TAB>role lines");

    auto* check_td = app.add_subcommand("check-td", "validate a tree decomposition");
    check_td->add_option("graph", graph_path)->required();
    check_td->add_option("decomposition", td_path)->required();
    check_td->add_flag("--path", path_only, "require a path decomposition");

    auto* bench = app.add_subcommand("bench", "run the verification sweeps");
    bench->add_option("--seed", seed);

    std::vector<const char*> argv;
    argv.push_back("mmds");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (solve->parsed()) {
            Graph g = parse_graph(detail::slurp(graph_path));
            Instance inst(g, k);
            std::optional<Solution> sol;
            if (algo == "brute") {
                OracleOptions opts;
                opts.use_forcing = !no_forcing;
                opts.budget_free_vertices = budget;
                opts.jobs = jobs;
                sol = brute_feasible(inst, opts);
            } else if (algo == "twdp") {
                NiceTreeDecomposition ntd;
                if (!td_path.empty()) {
                    TreeDecomposition td = parse_td(detail::slurp(td_path));
                    auto v = validate_decomposition(g, td);
                    if (!v.ok()) throw std::runtime_error("--td rejected: " + v.to_string());
                    td.n = g.n();
                    ntd = make_nice(td);
                } else {
                    ntd = make_nice(g);
                }
                sol = dp_witness(inst, ntd);
            } else {
                VcFptOptions opts;
                opts.jobs = jobs;
                sol = vc_fpt_feasible(inst, opts);
            }
            if (sol) {
                out << "FEASIBLE\n";
                detail::print_solution(out, *sol);
            } else {
                out << "INFEASIBLE\n";
            }
            return 0;
        }

        if (minimize->parsed()) {
            Graph g = parse_graph(detail::slurp(graph_path));
            OracleOptions opts;
            opts.use_forcing = !no_forcing;
            opts.budget_free_vertices = budget;
            opts.jobs = jobs;
            auto mm = brute_min_membership(g, opts);
            out << "k* " << mm.k_star << '\n';
            detail::print_solution(out, mm.witness);
            return 0;
        }

        if (verify->parsed()) {
            Graph g = parse_graph(detail::slurp(graph_path));
            Solution s = parse_solution(detail::slurp(solution_path));
            out << is_feasible(Instance(g, k), s).to_string() << '\n';
            return 0;
        }

        if (igreedy->parsed()) {
            IntervalSet iv = parse_intervals(detail::slurp(input_path));
            Solution s = greedy_dominating(iv);
            for (int id : chosen_interval_ids(iv, s)) out << id << '\n';
            out << "c max membership " << max_membership(interval_graph(iv), s) << '\n';
            return 0;
        }

        if (generate->parsed()) {
            ReductionOutput* red = nullptr;
            std::optional<Pp1in3Output> pp;
            std::optional<Sat3Output> sat;
            std::optional<MccOutput> mcc;
            std::optional<MisSplitOutput> mis;
            std::optional<Solution> witness;

            if ((kind == "pp1in3sat" || kind == "mcc") && gen_k->count() > 0)
                throw std::runtime_error(kind + " fixes the membership bound itself; drop -k");

            if (kind == "pp1in3sat") {
                CnfFormula phi = parse_cnf(detail::slurp(input_path));
                pp = reduce_pp1in3sat(phi);
                red = &pp->out;
                if (!emit_witness.empty()) {
                    auto a = find_one_in_three_assignment(phi);
                    if (!a) throw std::runtime_error("source is a no-instance; no witness");
                    witness = pp1in3_witness(*pp, *a);
                }
            } else if (kind == "sat3") {
                if (gen_k->count() == 0) throw std::runtime_error("sat3 requires -k");
                CnfFormula phi = parse_cnf(detail::slurp(input_path));
                sat = reduce_sat3(phi, k);
                red = &sat->out;
                if (!emit_witness.empty()) {
                    auto a = find_sat_assignment(phi);
                    if (!a) throw std::runtime_error("source is a no-instance; no witness");
                    witness = sat3_witness(*sat, *a);
                }
            } else if (kind == "mcc") {
                ColoredGraph cg = parse_colored_graph(detail::slurp(input_path));
                mcc = reduce_mcc(cg);
                red = &mcc->out;
                if (!emit_witness.empty()) {
                    auto clique = find_multicolored_clique(cg);
                    if (!clique) throw std::runtime_error("source is a no-instance; no witness");
                    witness = mcc_witness(*mcc, *clique);
                }
            } else {
                ColoredGraph cg = parse_colored_graph(detail::slurp(input_path));
                if (gen_k->count() == 0) k = cg.num_colors;
                mis = reduce_mis_split(cg, k);
                red = &mis->out;
                if (!emit_witness.empty()) {
                    auto tuple = find_multicolored_independent_set(cg);
                    if (!tuple) throw std::runtime_error("source is a no-instance; no witness");
                    witness = mis_witness(*mis, *tuple);
                }
            }

            if (!emit_td.empty()) {
                if (kind != "mcc")
                    throw std::runtime_error("--emit-td is only available for mcc");
                std::ostringstream ss;
                serialize_td(mcc_path_decomposition(*mcc), ss);
                detail::spit(emit_td, ss.str());
            }
            if (!emit_labels.empty()) {
                std::ostringstream ss;
                for (size_t i = 0; i < red->vertex_labels.size(); ++i)
                    ss << i + 1 << '\t' << red->vertex_labels[i] << '\n';
                detail::spit(emit_labels, ss.str());
            }
            if (witness) {
                std::ostringstream ss;
                serialize_solution(*witness, ss);
                detail::spit(emit_witness, ss.str());
            }
            out << "c generated from " << red->source_ref << '\n';
            out << "c k " << red->instance.k << '\n';
            serialize_graph(red->instance.graph, out);
            return 0;
        }

        if (check_td->parsed()) {
            Graph g = parse_graph(detail::slurp(graph_path));
            TreeDecomposition td = parse_td(detail::slurp(td_path));
            out << validate_decomposition(g, td, path_only).to_string() << '\n';
            return 0;
        }

        if (bench->parsed()) {
            VerificationConfig cfg;
            cfg.seed = seed;
            return run_verification(cfg, out) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace mmds
