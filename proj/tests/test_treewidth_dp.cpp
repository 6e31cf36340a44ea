#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mmds/instance_gen.hpp>
#include <mmds/oracle.hpp>
#include <mmds/treewidth_dp.hpp>

#include <cmath>

using namespace mmds;

namespace {

// Leaf -> Introduce(1) -> Introduce(2) -> Forget(1) -> Forget(2) = root.
NiceTreeDecomposition edge_ntd() {
    NiceTreeDecomposition ntd;
    ntd.n = 2;
    ntd.nodes.push_back({NodeKind::Leaf, 0, {}, {}});
    ntd.nodes.push_back({NodeKind::Introduce, 1, {0}, {1}});
    ntd.nodes.push_back({NodeKind::Introduce, 2, {1}, {1, 2}});
    ntd.nodes.push_back({NodeKind::Forget, 1, {2}, {2}});
    ntd.nodes.push_back({NodeKind::Forget, 2, {3}, {}});
    ntd.root = 4;
    return ntd;
}

}  // namespace

TEST_CASE("state encoding is a bijection onto the mixed-radix domain") {
    Rng rng(51);
    for (int t = 0; t < 200; ++t) {
        int k = rand_int(rng, 1, 6);
        int b = rand_int(rng, 0, 6);
        std::vector<int> c(static_cast<size_t>(b)), d(static_cast<size_t>(b));
        for (int p = 0; p < b; ++p) {
            c[static_cast<size_t>(p)] = rand_int(rng, 0, 1);
            d[static_cast<size_t>(p)] = rand_int(rng, 0, k);
        }
        uint64_t code = dp_encode_state(k, c, d);
        CHECK(code < *dp_state_space_size(k, b));
        std::vector<int> c2, d2;
        dp_decode_state(k, code, b, c2, d2);
        CHECK(c2 == c);
        CHECK(d2 == d);
    }

    CHECK(*dp_state_space_size(1, 3) == 64);    // 4^3
    CHECK(*dp_state_space_size(2, 2) == 36);    // 6^2
    CHECK(*dp_state_space_size(3, 0) == 1);
    CHECK_FALSE(dp_state_space_size(1000, 12).has_value());
}

TEST_CASE("hand-traced tables for a single edge at k = 1") {
    Graph g = Graph::from_edges(2, {{1, 2}});
    NiceTreeDecomposition ntd = edge_ntd();
    REQUIRE_FALSE(check_nice_structure(ntd));
    Instance inst(g, 1);
    DpOptions opts;
    opts.keep_tables = true;
    DpResult res = dp_run(inst, ntd, opts);
    CHECK(res.feasible);
    // Applying the recurrences by hand, radix 4, digit = 2c + d:
    CHECK(res.tables[0] == std::vector<uint64_t>{0});
    CHECK(res.tables[1] == std::vector<uint64_t>{0, 3});
    CHECK(res.tables[2] == std::vector<uint64_t>{0, 7, 13});
    CHECK(res.tables[3] == std::vector<uint64_t>{1, 3});
    CHECK(res.tables[4] == std::vector<uint64_t>{0});

    // reconstruction picks the least child encoding at each forget
    auto w = dp_witness(inst, ntd);
    REQUIRE(w);
    CHECK(w->members == std::vector<Vertex>{1});
    auto w2 = dp_witness(inst, ntd);
    CHECK(w->members == w2->members);
}

TEST_CASE("dp matches the oracle on the named graphs") {
    Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
    Graph c4 = cycle_graph(4);
    CHECK(dp_feasible(Instance(p3, 1), make_nice(p3)));
    NiceTreeDecomposition nc4 = make_nice(c4);
    CHECK_FALSE(dp_feasible(Instance(c4, 1), nc4));
    CHECK(dp_feasible(Instance(c4, 2), nc4));
    CHECK_FALSE(dp_witness(Instance(c4, 1), nc4).has_value());
}

TEST_CASE("dp equals brute force on random graphs for every k") {
    Rng rng(52);
    for (int t = 0; t < 40; ++t) {
        Graph g = t % 3 == 0 ? random_tree(rng, rand_int(rng, 2, 12))
                             : random_er_graph(rng, rand_int(rng, 1, 12), 0.35);
        NiceTreeDecomposition ntd = make_nice(g);
        for (int k = 1; k <= g.max_degree() + 1; ++k) {
            Instance inst(g, k);
            CHECK(dp_feasible(inst, ntd) == brute_feasible(inst).has_value());
        }
    }
}

TEST_CASE("dp witnesses verify and agree with feasibility") {
    Rng rng(53);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_er_graph(rng, rand_int(rng, 2, 12), 0.3);
        NiceTreeDecomposition ntd = make_nice(g);
        for (int k = 1; k <= g.max_degree() + 1; ++k) {
            Instance inst(g, k);
            auto w = dp_witness(inst, ntd);
            CHECK(w.has_value() == dp_feasible(inst, ntd));
            if (w) CHECK(is_feasible(inst, *w).ok());
        }
    }
}

TEST_CASE("join tables match the explicit splitting-function recurrence") {
    Rng rng(54);
    int joins_seen = 0;
    for (int t = 0; t < 12; ++t) {
        Graph g = t % 2 ? star_graph(rand_int(rng, 3, 6))
                        : random_er_graph(rng, rand_int(rng, 4, 9), 0.3);
        NiceTreeDecomposition ntd = make_nice(g);
        for (int k = 1; k <= 2; ++k) {
            Instance inst(g, k);
            DpOptions opts;
            opts.keep_tables = true;
            DpResult res = dp_run(inst, ntd, opts);
            for (size_t node = 0; node < ntd.nodes.size(); ++node) {
                const auto& nd = ntd.nodes[node];
                if (nd.kind != NodeKind::Join) continue;
                ++joins_seen;
                const auto& bag = nd.bag;
                const int b = static_cast<int>(bag.size());
                const auto& lt = res.tables[static_cast<size_t>(nd.children[0])];
                const auto& rt = res.tables[static_cast<size_t>(nd.children[1])];
                const uint64_t g_bound =
                    static_cast<uint64_t>(std::pow(k + 1, b)) + 1;  // (k+1)^|bag|
                std::vector<uint64_t> expect;
                std::vector<int> c, d;
                for (uint64_t code = 0; code < *dp_state_space_size(k, b); ++code) {
                    dp_decode_state(k, code, b, c, d);
                    std::vector<int> base(static_cast<size_t>(b)), ell(static_cast<size_t>(b));
                    bool valid = true;
                    for (int q = 0; q < b && valid; ++q) {
                        int cnt = c[static_cast<size_t>(q)];
                        for (int q2 = 0; q2 < b; ++q2)
                            if (q2 != q && c[static_cast<size_t>(q2)] &&
                                g.has_edge(bag[static_cast<size_t>(q)],
                                           bag[static_cast<size_t>(q2)]))
                                ++cnt;
                        base[static_cast<size_t>(q)] = cnt;
                        ell[static_cast<size_t>(q)] = d[static_cast<size_t>(q)] - cnt;
                        if (ell[static_cast<size_t>(q)] < 0) valid = false;
                    }
                    if (!valid) continue;
                    // enumerate g: bag -> [0, ell_u]
                    std::vector<int> gfun(static_cast<size_t>(b), 0);
                    uint64_t tried = 0;
                    bool one = false;
                    while (!one) {
                        ++tried;
                        std::vector<int> dj(static_cast<size_t>(b)), dh(static_cast<size_t>(b));
                        for (int q = 0; q < b; ++q) {
                            dj[static_cast<size_t>(q)] =
                                base[static_cast<size_t>(q)] + gfun[static_cast<size_t>(q)];
                            dh[static_cast<size_t>(q)] =
                                d[static_cast<size_t>(q)] - gfun[static_cast<size_t>(q)];
                        }
                        uint64_t cj = dp_encode_state(k, c, dj);
                        uint64_t ch = dp_encode_state(k, c, dh);
                        if (std::binary_search(lt.begin(), lt.end(), cj) &&
                            std::binary_search(rt.begin(), rt.end(), ch))
                            one = true;
                        if (one) break;
                        int pos = 0;
                        while (pos < b) {
                            if (++gfun[static_cast<size_t>(pos)] <= ell[static_cast<size_t>(pos)])
                                break;
                            gfun[static_cast<size_t>(pos)] = 0;
                            ++pos;
                        }
                        if (pos == b) break;
                    }
                    CHECK(tried <= g_bound);
                    if (one) expect.push_back(code);
                }
                CHECK(expect == res.tables[node]);
            }
        }
    }
    CHECK(joins_seen > 0);
}

TEST_CASE("witness reconstruction crosses join nodes") {
    Rng rng(55);
    for (int leaves = 3; leaves <= 7; ++leaves) {
        Graph g = star_graph(leaves);
        NiceTreeDecomposition ntd = make_nice(g);
        bool has_join = false;
        for (const auto& nd : ntd.nodes) has_join = has_join || nd.kind == NodeKind::Join;
        REQUIRE(has_join);
        for (int k = 1; k <= 3; ++k) {
            Instance inst(g, k);
            auto w = dp_witness(inst, ntd);
            CHECK(w.has_value() == brute_feasible(inst).has_value());
            if (w) CHECK(is_feasible(inst, *w).ok());
        }
    }
}

TEST_CASE("dp rejects decompositions of a different graph") {
    Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
    Graph tri = cycle_graph(3);
    NiceTreeDecomposition ntd = make_nice(p3);
    CHECK_THROWS_AS(dp_feasible(Instance(tri, 1), ntd), std::invalid_argument);

    NiceTreeDecomposition broken = make_nice(p3);
    broken.nodes[static_cast<size_t>(broken.root)].kind = NodeKind::Leaf;
    CHECK_THROWS_AS(dp_feasible(Instance(p3, 1), broken), std::invalid_argument);
}

TEST_CASE("dp refuses oversized state spaces through the budget") {
    Graph g = complete_graph(10);
    NiceTreeDecomposition ntd = make_nice(g);
    DpOptions opts;
    opts.max_stored_states = 16;
    CHECK_THROWS_AS(dp_feasible(Instance(g, 3), ntd, opts), BudgetError);
}
