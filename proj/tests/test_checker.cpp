#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mmds/checker.hpp>
#include <mmds/instance_gen.hpp>

using namespace mmds;

namespace {
const Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
const Graph c4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}  // namespace

TEST_CASE("instances and solutions are validated") {
    CHECK_THROWS_AS(Instance(p3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Solution({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(is_feasible(Instance(p3, 1), Solution({9})), std::invalid_argument);
}

TEST_CASE("membership counts closed-neighborhood hits") {
    CHECK(membership(p3, Solution({2}), 1) == 1);
    Graph k4 = complete_graph(4);
    Solution all({1, 2, 3, 4});
    for (Vertex v = 1; v <= 4; ++v) CHECK(membership(k4, all, v) == 4);
    CHECK(membership(c4, Solution({1, 3}), 2) == 2);
    CHECK_THROWS_AS(membership(p3, Solution({2}), 9), std::invalid_argument);
}

TEST_CASE("is_feasible verdicts carry witnesses") {
    CHECK(is_feasible(Instance(p3, 1), Solution({2})).ok());

    auto exceeded = is_feasible(Instance(c4, 1), Solution({1, 3}));
    CHECK(exceeded.kind == FeasibilityVerdict::Kind::MembershipExceeded);
    CHECK(exceeded.witness == 2);
    CHECK(exceeded.value == 2);
    CHECK(exceeded.to_string() == "MembershipExceeded 2 2");

    auto undominated = is_feasible(Instance(c4, 1), Solution({1}));
    CHECK(undominated.kind == FeasibilityVerdict::Kind::NotDominating);
    CHECK(undominated.witness == 3);
    CHECK(undominated.to_string() == "NotDominating 3");

    CHECK(is_feasible(Instance(p3, 1), Solution({2})).to_string() == "Feasible");
}

TEST_CASE("membership stays within 0..deg+1 and V is feasible at max degree + 1") {
    Rng rng(21);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_er_graph(rng, rand_int(rng, 1, 10), 0.4);
        std::vector<Vertex> all;
        for (Vertex v = 1; v <= g.n(); ++v) all.push_back(v);
        Solution full(all);
        for (Vertex v = 1; v <= g.n(); ++v) {
            int m = membership(g, full, v);
            CHECK(m == g.degree(v) + 1);
        }
        CHECK(is_feasible(Instance(g, g.max_degree() + 1), full).ok());
    }
}

TEST_CASE("feasibility is monotone in k") {
    Rng rng(22);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_er_graph(rng, rand_int(rng, 2, 9), 0.5);
        // random candidate set
        std::vector<Vertex> members;
        for (Vertex v = 1; v <= g.n(); ++v)
            if (rand_coin(rng, 0.4)) members.push_back(v);
        Solution s(std::move(members));
        for (int k = 1; k <= g.max_degree(); ++k)
            if (is_feasible(Instance(g, k), s).ok())
                CHECK(is_feasible(Instance(g, k + 1), s).ok());
    }
}

TEST_CASE("forcing handles stars, paths, and cycles") {
    for (int k = 1; k <= 3; ++k) {
        Graph star = star_graph(k + 2);
        ForcingResult fr = forcing_preprocess(Instance(star, k));
        CHECK(fr.forced_in == std::vector<Vertex>{1});
        CHECK(fr.forced_out.size() == static_cast<size_t>(k + 2));
        CHECK_FALSE(fr.conflict);
    }

    ForcingResult p3f = forcing_preprocess(Instance(p3, 1));
    CHECK(p3f.forced_in == std::vector<Vertex>{2});
    CHECK(p3f.forced_out == std::vector<Vertex>{1, 3});

    // with k=2 the center only has 2 pendants, not more than k
    ForcingResult p3k2 = forcing_preprocess(Instance(p3, 2));
    CHECK(p3k2.forced_in.empty());
    CHECK(p3k2.forced_out.empty());

    for (int k = 1; k <= 3; ++k) {
        ForcingResult c4f = forcing_preprocess(Instance(c4, k));
        CHECK(c4f.forced_in.empty());
        CHECK(c4f.forced_out.empty());
    }
}

TEST_CASE("forced-in and forced-out never overlap") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        Graph base = random_er_graph(rng, rand_int(rng, 2, 8), 0.3);
        Graph g = with_random_pendants(rng, base, rand_int(rng, 0, 5));
        for (int k = 1; k <= 3; ++k) {
            ForcingResult fr = forcing_preprocess(Instance(g, k));
            std::vector<Vertex> both;
            std::set_intersection(fr.forced_in.begin(), fr.forced_in.end(),
                                  fr.forced_out.begin(), fr.forced_out.end(),
                                  std::back_inserter(both));
            CHECK(both.empty());
        }
    }
}

TEST_CASE("forcing reports conflicts when forced hubs crowd a neighborhood") {
    // Two adjacent hubs, two pendants each: both forced in at k=1, and then
    // each hub sees two solution vertices in its closed neighborhood.
    Graph g = Graph::from_edges(6, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    ForcingResult fr = forcing_preprocess(Instance(g, 1));
    CHECK(fr.forced_in == std::vector<Vertex>{1, 2});
    CHECK(fr.conflict);
    CHECK_FALSE(forcing_preprocess(Instance(g, 2)).conflict);
}
