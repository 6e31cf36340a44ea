#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mmds/instance_gen.hpp>
#include <mmds/oracle.hpp>

using namespace mmds;

namespace {
const Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
const Graph c4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}  // namespace

TEST_CASE("brute feasibility on the small named graphs") {
    auto sol = brute_feasible(Instance(p3, 1));
    REQUIRE(sol);
    CHECK(sol->members == std::vector<Vertex>{2});

    CHECK_FALSE(brute_feasible(Instance(c4, 1)));  // no perfect code in C4
    auto c4sol = brute_feasible(Instance(c4, 2));
    REQUIRE(c4sol);
    CHECK(is_feasible(Instance(c4, 2), *c4sol).ok());
}

TEST_CASE("brute minimum membership") {
    auto p3m = brute_min_membership(p3);
    CHECK(p3m.k_star == 1);
    CHECK(p3m.witness.members == std::vector<Vertex>{2});

    CHECK(brute_min_membership(c4).k_star == 2);

    auto k4m = brute_min_membership(complete_graph(4));
    CHECK(k4m.k_star == 1);
    CHECK(k4m.witness.members == std::vector<Vertex>{1});
}

TEST_CASE("budget refusals are explicit") {
    Graph big = star_graph(25);  // 26 free vertices without forcing
    CHECK_THROWS_AS(brute_feasible(Instance(big, 1)), BudgetError);

    OracleOptions opts;
    opts.budget_free_vertices = 26;
    auto sol = brute_feasible(Instance(big, 1), opts);
    REQUIRE(sol);
    CHECK(sol->members == std::vector<Vertex>{1});

    // forcing pins the hub and pendants, leaving nothing free
    OracleOptions forced;
    forced.use_forcing = true;
    CHECK(brute_feasible(Instance(big, 1), forced).has_value());
}

TEST_CASE("forcing shrinks the search and preserves verdicts") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        Graph g = t % 2 ? random_tree(rng, rand_int(rng, 2, 12))
                        : random_er_graph(rng, rand_int(rng, 2, 12), 0.3);
        for (int k = 1; k <= g.max_degree() + 1; ++k) {
            Instance inst(g, k);
            OracleOptions forced;
            forced.use_forcing = true;
            auto with = brute_feasible(inst, forced);
            auto without = brute_feasible(inst);
            CHECK(with.has_value() == without.has_value());
            if (with) {
                CHECK(is_feasible(inst, *with).ok());
                ForcingResult fr = forcing_preprocess(inst);
                for (Vertex v : fr.forced_in) CHECK(with->contains(v));
                for (Vertex v : fr.forced_out) CHECK_FALSE(with->contains(v));
            }
        }
    }
}

TEST_CASE("minimum membership never exceeds max degree + 1, frontier is monotone") {
    Rng rng(32);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_er_graph(rng, rand_int(rng, 1, 11), 0.35);
        auto mm = brute_min_membership(g);
        CHECK(mm.k_star >= 1);
        CHECK(mm.k_star <= g.max_degree() + 1);
        CHECK(is_feasible(Instance(g, mm.k_star), mm.witness).ok());
        if (mm.k_star > 1) CHECK_FALSE(brute_feasible(Instance(g, mm.k_star - 1)));
        for (int k = mm.k_star; k <= g.max_degree() + 1; ++k)
            CHECK(brute_feasible(Instance(g, k)).has_value());
    }
}

TEST_CASE("parallel search returns the same witness as sequential") {
    Rng rng(33);
    for (int t = 0; t < 12; ++t) {
        Graph g = random_er_graph(rng, 12, 0.3);
        for (int k : {1, 2, 3}) {
            Instance inst(g, k);
            OracleOptions seq, par;
            par.jobs = 4;
            auto a = brute_feasible(inst, seq);
            auto b = brute_feasible(inst, par);
            CHECK(a.has_value() == b.has_value());
            if (a) CHECK(a->members == b->members);
        }
    }
}
