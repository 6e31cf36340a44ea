#pragma once

// Property and structural verification sweeps. Each criterion runs a fixed
// seeded corpus and reports one pass/fail line; the whole suite is wired
// into both the acceptance test binary and the `bench` CLI subcommand.

#include <chrono>
#include <ostream>
#include <set>

#include "instance_gen.hpp"
#include "interval.hpp"
#include "mcc_reduction.hpp"
#include "oracle.hpp"
#include "reductions.hpp"
#include "treewidth_dp.hpp"
#include "vc_fpt.hpp"

namespace mmds {

struct VerificationConfig {
    uint64_t seed = 20250808;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = true;
    long long checks = 0;
    std::string detail;  // first failure, or empty
    double seconds = 0;

    CriterionResult() = default;
    CriterionResult(int idx, std::string nm) : index(idx), name(std::move(nm)) {}

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

namespace detail {

struct OracleSweepRecord {
    Graph g;
    int max_degree = 0;
    std::vector<char> feasible;  // index k, 1..max_degree+1
    int k_star = 0;
    bool k_star_witness_ok = false;
};

inline std::vector<Graph> oracle_corpus(Rng& rng) {
    std::vector<Graph> graphs;
    for (int t = 0; t < 80; ++t) graphs.push_back(random_er_graph(rng, rand_int(rng, 4, 14), 0.2));
    for (int t = 0; t < 80; ++t) graphs.push_back(random_er_graph(rng, rand_int(rng, 4, 14), 0.4));
    for (int t = 0; t < 28; ++t) graphs.push_back(random_tree(rng, rand_int(rng, 2, 14)));
    for (int n = 3; n <= 14; ++n) graphs.push_back(cycle_graph(n));
    return graphs;
}

}  // namespace detail

// 1. brute force, treewidth DP, and vc-FPT agree on every instance, and all
// returned witnesses verify.
inline CriterionResult criterion_oracle_cross_validation(
    const VerificationConfig& cfg, std::vector<detail::OracleSweepRecord>& records) {
    CriterionResult res{1, "oracle-cross-validation"};
    Rng rng(cfg.seed + 1);
    auto graphs = detail::oracle_corpus(rng);
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        detail::OracleSweepRecord rec{g, g.max_degree(), {}, 0, false};
        rec.feasible.assign(static_cast<size_t>(rec.max_degree) + 2, 0);
        NiceTreeDecomposition ntd = make_nice(build_tree_decomposition(g));
        for (int k = 1; k <= rec.max_degree + 1; ++k) {
            Instance inst(g, k);
            auto brute = brute_feasible(inst);
            bool dp = dp_feasible(inst, ntd);
            auto vc = vc_fpt_feasible(inst);
            ++res.checks;
            if (brute.has_value() != dp || brute.has_value() != vc.has_value()) {
                res.fail("solver disagreement at graph " + std::to_string(gi) + " k=" +
                         std::to_string(k) + " (brute=" + std::to_string(brute.has_value()) +
                         " dp=" + std::to_string(dp) + " vcfpt=" +
                         std::to_string(vc.has_value()) + ")");
                continue;
            }
            if (brute && !is_feasible(inst, *brute).ok())
                res.fail("brute witness fails checker at graph " + std::to_string(gi));
            if (vc && !is_feasible(inst, *vc).ok())
                res.fail("vc-fpt witness fails checker at graph " + std::to_string(gi));
            rec.feasible[static_cast<size_t>(k)] = brute.has_value();
        }
        auto mm = brute_min_membership(g);
        rec.k_star = mm.k_star;
        rec.k_star_witness_ok = is_feasible(Instance(g, mm.k_star), mm.witness).ok();
        records.push_back(std::move(rec));
    }
    return res;
}

// 2. Every DP table bit equals existence of an inducing set found by
// exhaustive search over the processed vertices.
inline CriterionResult criterion_dp_table_invariant(const VerificationConfig& cfg) {
    CriterionResult res{2, "dp-table-invariant"};
    Rng rng(cfg.seed + 2);
    std::vector<Graph> graphs;
    for (int t = 0; t < 7; ++t) graphs.push_back(random_er_graph(rng, rand_int(rng, 2, 10), 0.3));
    for (int t = 0; t < 7; ++t) graphs.push_back(random_er_graph(rng, rand_int(rng, 2, 10), 0.5));
    for (int t = 0; t < 4; ++t) graphs.push_back(random_tree(rng, rand_int(rng, 2, 10)));
    graphs.push_back(cycle_graph(6));
    graphs.push_back(cycle_graph(9));

    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        NiceTreeDecomposition ntd = make_nice(build_tree_decomposition(g));
        auto subtree = dp_subtree_vertices(ntd);
        for (int k = 1; k <= 3; ++k) {
            Instance inst(g, k);
            DpOptions opts;
            opts.keep_tables = true;
            DpResult dp = dp_run(inst, ntd, opts);
            for (size_t node = 0; node < ntd.nodes.size(); ++node) {
                const auto& bag = ntd.nodes[node].bag;
                const auto& processed = subtree[node];  // X_i^+
                const int np = static_cast<int>(processed.size());
                // Closed neighborhoods restricted to X_i^+, as index masks.
                std::vector<uint32_t> closed(static_cast<size_t>(np), 0);
                for (int a = 0; a < np; ++a)
                    for (int b = 0; b < np; ++b)
                        if (a == b || g.has_edge(processed[static_cast<size_t>(a)],
                                                 processed[static_cast<size_t>(b)]))
                            closed[static_cast<size_t>(a)] |= 1u << b;
                std::vector<int> bag_idx;  // positions of bag vertices inside processed
                for (Vertex v : bag)
                    bag_idx.push_back(static_cast<int>(
                        std::lower_bound(processed.begin(), processed.end(), v) -
                        processed.begin()));
                std::vector<char> in_bag(static_cast<size_t>(np), 0);
                for (int idx : bag_idx) in_bag[static_cast<size_t>(idx)] = 1;

                std::vector<uint64_t> expected;
                std::vector<int> c(bag.size()), d(bag.size());
                for (uint32_t mask = 0; mask < (1u << np); ++mask) {
                    bool ok = true;
                    for (int a = 0; a < np && ok; ++a) {
                        int cnt = __builtin_popcount(closed[static_cast<size_t>(a)] & mask);
                        if (in_bag[static_cast<size_t>(a)]) {
                            if (cnt > k) ok = false;
                        } else {
                            if (cnt < 1 || cnt > k) ok = false;
                        }
                    }
                    if (!ok) continue;
                    for (size_t p = 0; p < bag.size(); ++p) {
                        int idx = bag_idx[p];
                        c[p] = mask >> idx & 1;
                        d[p] = __builtin_popcount(closed[static_cast<size_t>(idx)] & mask);
                    }
                    expected.push_back(dp_encode_state(k, c, d));
                }
                std::sort(expected.begin(), expected.end());
                expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
                ++res.checks;
                if (expected != dp.tables[node])
                    res.fail("table mismatch at graph " + std::to_string(gi) + " k=" +
                             std::to_string(k) + " node " + std::to_string(node));
            }
        }
    }
    return res;
}

// 3. The addressable state space of every node is exactly (2(k+1))^|bag|,
// measured by enumerating and encoding all (c, d) pairs.
inline CriterionResult criterion_dp_state_count(const VerificationConfig& cfg) {
    CriterionResult res{3, "dp-state-count"};
    Rng rng(cfg.seed + 3);
    std::vector<Graph> graphs;
    for (int t = 0; t < 14; ++t) graphs.push_back(random_er_graph(rng, rand_int(rng, 2, 8), 0.4));
    for (int t = 0; t < 4; ++t) graphs.push_back(random_tree(rng, rand_int(rng, 2, 8)));
    graphs.push_back(cycle_graph(5));
    graphs.push_back(cycle_graph(8));

    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        NiceTreeDecomposition ntd = make_nice(build_tree_decomposition(graphs[gi]));
        for (int k = 1; k <= 2; ++k) {
            for (size_t node = 0; node < ntd.nodes.size(); ++node) {
                const int b = static_cast<int>(ntd.nodes[node].bag.size());
                auto domain = dp_state_space_size(k, b);
                if (!domain) {
                    res.fail("state space overflow at tiny bag, graph " + std::to_string(gi));
                    continue;
                }
                // Enumerate every (c, d) function pair with an odometer.
                std::vector<int> c(static_cast<size_t>(b), 0), d(static_cast<size_t>(b), 0);
                std::vector<uint64_t> codes;
                codes.reserve(*domain);
                while (true) {
                    codes.push_back(dp_encode_state(k, c, d));
                    int pos = 0;
                    while (pos < b) {
                        if (++d[static_cast<size_t>(pos)] <= k) break;
                        d[static_cast<size_t>(pos)] = 0;
                        if (++c[static_cast<size_t>(pos)] <= 1) break;
                        c[static_cast<size_t>(pos)] = 0;
                        ++pos;
                    }
                    if (pos == b) break;
                }
                std::sort(codes.begin(), codes.end());
                bool distinct = std::adjacent_find(codes.begin(), codes.end()) == codes.end();
                bool in_range = codes.empty() || codes.back() < *domain;
                ++res.checks;
                if (codes.size() != *domain || !distinct || !in_range)
                    res.fail("state count mismatch: bag " + std::to_string(b) + " k=" +
                             std::to_string(k) + " counted " + std::to_string(codes.size()) +
                             " want " + std::to_string(*domain));
            }
        }
    }
    return res;
}

// 4. Greedy interval output dominates with membership at most 3.
inline CriterionResult criterion_interval_greedy(const VerificationConfig& cfg) {
    CriterionResult res{4, "interval-greedy"};
    Rng rng(cfg.seed + 4);
    for (int t = 0; t < 500; ++t) {
        int count = rand_int(rng, 1, 200);
        IntervalSet iv = random_intervals(rng, count, 400);
        Solution s = greedy_dominating(iv);
        Graph ig = interval_graph(iv);
        auto verdict = is_feasible(Instance(ig, 3), s);
        ++res.checks;
        if (!verdict.ok())
            res.fail("trial " + std::to_string(t) + ": " + verdict.to_string());
    }
    return res;
}

// 5. Exactly-one-true decision of a positive 3-CNF equals k=1 feasibility of
// the reduced graph.
inline CriterionResult criterion_pp1in3sat_equivalence(const VerificationConfig& cfg) {
    CriterionResult res{5, "pp1in3sat-equivalence"};
    Rng rng(cfg.seed + 5);
    for (int t = 0; t < 100; ++t) {
        int n = rand_int(rng, 3, 8), m = rand_int(rng, 1, 5);
        CnfFormula phi = random_positive_3cnf(rng, n, m);
        Pp1in3Output red = reduce_pp1in3sat(phi);
        ++res.checks;
        if (red.out.instance.graph.n() != 2 * n + m) {
            res.fail("vertex census mismatch at trial " + std::to_string(t));
            continue;
        }
        auto assignment = find_one_in_three_assignment(phi);
        bool mmds = brute_feasible(red.out.instance).has_value();
        if (assignment.has_value() != mmds)
            res.fail("equivalence broken at trial " + std::to_string(t) + " (source=" +
                     std::to_string(assignment.has_value()) + ")");
        if (assignment &&
            !is_feasible(red.out.instance, pp1in3_witness(red, *assignment)).ok())
            res.fail("witness infeasible at trial " + std::to_string(t));
    }
    return res;
}

// 6. Multicolored independent set decision equals k=2 feasibility of the
// split-graph output; the output certifies split.
inline CriterionResult criterion_mis_split_equivalence(const VerificationConfig& cfg) {
    CriterionResult res{6, "mis-split-equivalence"};
    Rng rng(cfg.seed + 6);
    for (int t = 0; t < 100; ++t) {
        int total = rand_int(rng, 2, 8);
        int s1 = rand_int(rng, 1, total - 1);
        ColoredGraph g = random_colored_graph(rng, {s1, total - s1}, t % 2 ? 0.3 : 0.6);
        MisSplitOutput red = reduce_mis_split(g, 2);
        const Instance& inst = red.out.instance;
        ++res.checks;

        long long cross_edges = static_cast<long long>(red.x_vertices.size());
        if (inst.graph.n() != g.graph.n() + 1 + 2 * 3 + cross_edges ||
            cross_edges != g.graph.m()) {
            res.fail("vertex census mismatch at trial " + std::to_string(t));
            continue;
        }
        // Split certificate: clique part complete, the rest pairwise nonadjacent.
        for (size_t i = 0; i < red.clique_part.size(); ++i)
            for (size_t j = i + 1; j < red.clique_part.size(); ++j)
                if (!inst.graph.has_edge(red.clique_part[i], red.clique_part[j]))
                    res.fail("clique part incomplete at trial " + std::to_string(t));
        std::vector<Vertex> indep;
        for (const auto& us : red.u_sets) indep.insert(indep.end(), us.begin(), us.end());
        indep.insert(indep.end(), red.x_vertices.begin(), red.x_vertices.end());
        for (size_t i = 0; i < indep.size(); ++i)
            for (size_t j = i + 1; j < indep.size(); ++j)
                if (inst.graph.has_edge(indep[i], indep[j]))
                    res.fail("independent part has an edge at trial " + std::to_string(t));

        auto src = find_multicolored_independent_set(g);
        auto by_vcfpt = vc_fpt_feasible(inst);
        if (src.has_value() != by_vcfpt.has_value())
            res.fail("equivalence broken at trial " + std::to_string(t) + " (source=" +
                     std::to_string(src.has_value()) + ")");
        if (by_vcfpt && !is_feasible(inst, *by_vcfpt).ok())
            res.fail("vc-fpt witness infeasible at trial " + std::to_string(t));
        if (inst.graph.n() <= 24) {
            auto by_brute = brute_feasible(inst);
            if (by_brute.has_value() != by_vcfpt.has_value())
                res.fail("brute/vc-fpt disagree at trial " + std::to_string(t));
        }
        if (src && !is_feasible(inst, mis_witness(red, *src)).ok())
            res.fail("witness infeasible at trial " + std::to_string(t));
    }
    return res;
}

// 7. SAT decision equals feasibility for the vertex-cover lower-bound
// construction at k=2, and the emitted cover certificate is exact.
inline CriterionResult criterion_sat3_equivalence(const VerificationConfig& cfg) {
    CriterionResult res{7, "sat3-equivalence"};
    Rng rng(cfg.seed + 7);
    const int k = 2;
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m)
            for (int t = 0; t < 15; ++t) {
                CnfFormula phi = random_cnf(rng, n, m);
                Sat3Output red = reduce_sat3(phi, k);
                const Instance& inst = red.out.instance;
                ++res.checks;

                if (static_cast<int>(red.vertex_cover_certificate.size()) !=
                    (n + 1) * (k + 1)) {
                    res.fail("certificate size mismatch at n=" + std::to_string(n) + " m=" +
                             std::to_string(m));
                    continue;
                }
                VertexBitset cert(inst.graph.n());
                for (Vertex v : red.vertex_cover_certificate) cert.set(v);
                bool covers = true;
                for (auto [u, v] : inst.graph.edges())
                    if (!cert.test(u) && !cert.test(v)) covers = false;
                if (!covers) res.fail("certificate misses an edge");

                auto src = find_sat_assignment(phi);
                OracleOptions opts;
                opts.use_forcing = true;
                bool mmds = brute_feasible(inst, opts).has_value();
                if (src.has_value() != mmds)
                    res.fail("equivalence broken at n=" + std::to_string(n) + " m=" +
                             std::to_string(m) + " trial " + std::to_string(t));
                if (src && !is_feasible(inst, sat3_witness(red, *src)).ok())
                    res.fail("witness infeasible at trial " + std::to_string(t));
            }
    return res;
}

// 8. Planted-clique instances: witness feasible at n+1 with all connector
// memberships exactly n+1; emitted path decomposition valid within the
// width bound; vertex census matches the closed forms.
inline CriterionResult criterion_mcc_structure(const VerificationConfig& cfg) {
    CriterionResult res{8, "mcc-forward-structure"};
    Rng rng(cfg.seed + 8);
    const int n = 2;
    for (int k = 2; k <= 3; ++k) {
        for (int t = 0; t < 10; ++t) {
            auto planted = random_planted_clique(rng, k, n, 0.3);
            MccOutput red = reduce_mcc(planted.graph);
            const Instance& inst = red.out.instance;
            ++res.checks;

            if (inst.k != n + 1) res.fail("membership bound is not n+1");
            Solution w = mcc_witness(red, planted.clique);
            auto verdict = is_feasible(inst, w);
            if (!verdict.ok())
                res.fail("witness infeasible (k=" + std::to_string(k) + " trial " +
                         std::to_string(t) + "): " + verdict.to_string());
            for (Vertex cv : mcc_connector_vertices(red))
                if (membership(inst.graph, w, cv) != n + 1)
                    res.fail("connector membership differs from n+1 at vertex " +
                             std::to_string(cv));

            TreeDecomposition td = mcc_path_decomposition(red);
            auto tdv = validate_decomposition(inst.graph, td, /*path_only=*/true);
            int bound = 4 * (k * (k - 1) / 2) + 5;
            if (!tdv.ok())
                res.fail("path decomposition invalid: " + tdv.to_string());
            else if (tdv.width > bound)
                res.fail("path width " + std::to_string(tdv.width) + " exceeds bound " +
                         std::to_string(bound));

            // Census recomputed from the source instance alone.
            long long gsz = mcc_gadget_vertex_count(n);
            long long extras = mcc_block_extra_count(n);
            long long expect = static_cast<long long>(k) * (n * gsz + extras);
            long long cross = 0;
            for (auto [u, v] : planted.graph.graph.edges())
                if (planted.graph.color[static_cast<size_t>(u)] !=
                    planted.graph.color[static_cast<size_t>(v)])
                    ++cross;
            expect += cross * gsz + static_cast<long long>(k) * (k - 1) / 2 * extras;
            expect += 4ll * k * (k - 1) / 2;
            if (inst.graph.n() != expect || expect != mcc_expected_vertex_count(red))
                res.fail("vertex census mismatch (k=" + std::to_string(k) + "): got " +
                         std::to_string(inst.graph.n()) + " want " + std::to_string(expect));
            if (gsz != 3 * n * n + 8 * n + 2) res.fail("gadget census formula broken");
        }
    }
    return res;
}

// 9. Forcing-accelerated and naive brute force agree everywhere.
inline CriterionResult criterion_forcing_soundness(const VerificationConfig& cfg) {
    CriterionResult res{9, "forcing-soundness"};
    Rng rng(cfg.seed + 9);
    std::vector<Graph> graphs;
    for (int t = 0; t < 60; ++t) graphs.push_back(random_tree(rng, rand_int(rng, 2, 12)));
    for (int t = 0; t < 10; ++t) graphs.push_back(star_graph(rand_int(rng, 2, 11)));
    for (int t = 0; t < 30; ++t) {
        Graph base = random_er_graph(rng, rand_int(rng, 3, 8), 0.4);
        graphs.push_back(with_random_pendants(rng, base, rand_int(rng, 1, 4)));
    }
    for (int t = 0; t < 50; ++t) graphs.push_back(random_er_graph(rng, rand_int(rng, 2, 12), 0.2));
    for (int t = 0; t < 50; ++t) graphs.push_back(random_er_graph(rng, rand_int(rng, 2, 12), 0.5));

    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        for (int k = 1; k <= g.max_degree() + 1; ++k) {
            Instance inst(g, k);
            OracleOptions forced;
            forced.use_forcing = true;
            auto with = brute_feasible(inst, forced);
            auto without = brute_feasible(inst);
            ++res.checks;
            if (with.has_value() != without.has_value())
                res.fail("forcing changed the verdict at graph " + std::to_string(gi) + " k=" +
                         std::to_string(k));
            if (with && !is_feasible(inst, *with).ok())
                res.fail("forced witness infeasible at graph " + std::to_string(gi));
        }
    }
    return res;
}

// 10. feasible(k) implies feasible(k+1), and the minimum membership never
// exceeds max degree + 1.
inline CriterionResult criterion_monotonicity(
    const std::vector<detail::OracleSweepRecord>& records) {
    CriterionResult res{10, "monotonicity"};
    for (size_t gi = 0; gi < records.size(); ++gi) {
        const auto& rec = records[gi];
        for (int k = 1; k < rec.max_degree + 1; ++k) {
            ++res.checks;
            if (rec.feasible[static_cast<size_t>(k)] && !rec.feasible[static_cast<size_t>(k + 1)])
                res.fail("monotonicity broken at graph " + std::to_string(gi) + " k=" +
                         std::to_string(k));
        }
        ++res.checks;
        if (rec.k_star < 1 || rec.k_star > rec.max_degree + 1)
            res.fail("k* out of range at graph " + std::to_string(gi));
        if (!rec.k_star_witness_ok)
            res.fail("k* witness infeasible at graph " + std::to_string(gi));
        if (!rec.feasible[static_cast<size_t>(rec.k_star)])
            res.fail("k* not marked feasible at graph " + std::to_string(gi));
        if (rec.k_star > 1 && rec.feasible[static_cast<size_t>(rec.k_star - 1)])
            res.fail("k* not minimal at graph " + std::to_string(gi));
    }
    return res;
}

inline std::vector<CriterionResult> run_all_criteria(const VerificationConfig& cfg) {
    std::vector<CriterionResult> out;
    std::vector<detail::OracleSweepRecord> records;
    auto timed = [&out](CriterionResult r, std::chrono::steady_clock::time_point t0) {
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    };
    auto now = [] { return std::chrono::steady_clock::now(); };

    auto t = now();
    timed(criterion_oracle_cross_validation(cfg, records), t);
    t = now();
    timed(criterion_dp_table_invariant(cfg), t);
    t = now();
    timed(criterion_dp_state_count(cfg), t);
    t = now();
    timed(criterion_interval_greedy(cfg), t);
    t = now();
    timed(criterion_pp1in3sat_equivalence(cfg), t);
    t = now();
    timed(criterion_mis_split_equivalence(cfg), t);
    t = now();
    timed(criterion_sat3_equivalence(cfg), t);
    t = now();
    timed(criterion_mcc_structure(cfg), t);
    t = now();
    timed(criterion_forcing_soundness(cfg), t);
    t = now();
    timed(criterion_monotonicity(records), t);
    return out;
}

inline bool run_verification(const VerificationConfig& cfg, std::ostream& out) {
    auto results = run_all_criteria(cfg);
    bool all = true;
    char line[256];
    for (const auto& r : results) {
        std::snprintf(line, sizeof line, "%-4s %2d  %-28s %8lld checks  %7.2fs  %s",
                      r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(), r.checks, r.seconds,
                      r.detail.c_str());
        out << line << '\n';
        all = all && r.pass;
    }
    out << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << '\n';
    return all;
}

}  // namespace mmds
