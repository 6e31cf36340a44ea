#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mmds/instance_gen.hpp>
#include <mmds/tree_decomposition.hpp>

using namespace mmds;

namespace {

TreeDecomposition two_bag_path() {
    TreeDecomposition td;
    td.n = 3;
    td.num_nodes = 2;
    td.bags = {{}, {1, 2}, {2, 3}};
    td.tree_edges = {{1, 2}};
    return td;
}

int count_kind(const NiceTreeDecomposition& ntd, NodeKind kind) {
    int c = 0;
    for (const auto& nd : ntd.nodes)
        if (nd.kind == kind) ++c;
    return c;
}

}  // namespace

TEST_CASE("min-fill widths on the named families") {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        Graph tree = random_tree(rng, rand_int(rng, 2, 12));
        TreeDecomposition td = build_tree_decomposition(tree);
        auto v = validate_decomposition(tree, td);
        REQUIRE(v.ok());
        CHECK(v.width == 1);
    }

    Graph k5 = complete_graph(5);
    auto k5v = validate_decomposition(k5, build_tree_decomposition(k5));
    REQUIRE(k5v.ok());
    CHECK(k5v.width == 4);

    Graph c4 = cycle_graph(4);
    auto c4v = validate_decomposition(c4, build_tree_decomposition(c4));
    REQUIRE(c4v.ok());
    CHECK(c4v.width == 2);

    Graph lone(1);
    lone.finish();
    CHECK(validate_decomposition(lone, build_tree_decomposition(lone)).ok());
}

TEST_CASE("min-fill handles disconnected graphs") {
    Graph g(5);
    g.add_edge(1, 2);
    g.add_edge(4, 5);
    g.finish();
    auto td = build_tree_decomposition(g);
    CHECK(validate_decomposition(g, td).ok());
}

TEST_CASE("min-fill is valid on random graphs") {
    Rng rng(42);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_er_graph(rng, rand_int(rng, 1, 14), 0.4);
        CHECK(validate_decomposition(g, build_tree_decomposition(g)).ok());
    }
}

TEST_CASE("validate_decomposition verdicts") {
    Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
    TreeDecomposition td = two_bag_path();
    auto good = validate_decomposition(p3, td, /*path_only=*/true);
    CHECK(good.ok());
    CHECK(good.width == 1);

    // dropping vertex 2 from the first bag leaves edge 1-2 uncovered
    TreeDecomposition broken = two_bag_path();
    broken.bags[1] = {1};
    auto uncovered = validate_decomposition(p3, broken);
    CHECK(uncovered.kind == TdVerdict::Kind::UncoveredEdge);
    CHECK(uncovered.edge == std::pair<Vertex, Vertex>{1, 2});

    TreeDecomposition missing = two_bag_path();
    missing.bags[2] = {2};
    auto unvertex = validate_decomposition(p3, missing);
    CHECK(unvertex.kind == TdVerdict::Kind::UncoveredVertex);
    CHECK(unvertex.vertex == 3);

    TreeDecomposition loose = two_bag_path();
    loose.tree_edges.clear();
    CHECK(validate_decomposition(p3, loose).kind == TdVerdict::Kind::NotATree);

    // vertex 2 occurs in both endpoints of a 3-node path but not the middle
    Graph pair = Graph::from_edges(3, {{1, 2}});
    TreeDecomposition disc;
    disc.n = 3;
    disc.num_nodes = 3;
    disc.bags = {{}, {1, 2}, {3}, {2}};
    disc.tree_edges = {{1, 2}, {2, 3}};
    CHECK(validate_decomposition(pair, disc).kind == TdVerdict::Kind::DisconnectedOccurrence);

    TreeDecomposition bad_vertex = two_bag_path();
    bad_vertex.bags[1] = {1, 9};
    CHECK(validate_decomposition(p3, bad_vertex).kind == TdVerdict::Kind::Malformed);
}

TEST_CASE("star path decomposition validates as a path") {
    Graph star = star_graph(4);  // center 1, leaves 2..5
    TreeDecomposition td;
    td.n = 5;
    td.num_nodes = 4;
    td.bags = {{}, {1, 2}, {1, 3}, {1, 4}, {1, 5}};
    td.tree_edges = {{1, 2}, {2, 3}, {3, 4}};
    auto v = validate_decomposition(star, td, /*path_only=*/true);
    CHECK(v.ok());
    CHECK(v.width == 1);

    // same bags on a star-shaped tree fail the path requirement
    TreeDecomposition branching = td;
    branching.tree_edges = {{1, 2}, {2, 3}, {2, 4}};
    CHECK(validate_decomposition(star, branching, true).kind == TdVerdict::Kind::NotAPath);
    CHECK(validate_decomposition(star, branching, false).ok());
}

TEST_CASE("td text format round trip and errors") {
    Rng rng(43);
    for (int t = 0; t < 15; ++t) {
        Graph g = random_er_graph(rng, rand_int(rng, 1, 10), 0.4);
        TreeDecomposition td = build_tree_decomposition(g);
        std::ostringstream ss;
        serialize_td(td, ss);
        TreeDecomposition back = parse_td(ss.str());
        CHECK(back.num_nodes == td.num_nodes);
        CHECK(back.n == td.n);
        for (int i = 1; i <= td.num_nodes; ++i) CHECK(back.bags[i] == td.bags[i]);
        CHECK(back.tree_edges == td.tree_edges);
    }

    CHECK_THROWS_AS(parse_td(std::string("b 1 1 2\n")), ParseError);
    CHECK_THROWS_AS(parse_td(std::string("s td 2 2 3\nb 1 1 2\n")), ParseError);
    CHECK_THROWS_AS(parse_td(std::string("s td 1 2 3\nb 1 1 2\nb 1 2\n")), ParseError);
    CHECK_THROWS_AS(parse_td(std::string("s td 1 2 3\nb 1 1 9\n")), ParseError);
}

TEST_CASE("make_nice on a single bag yields the introduce/forget chain") {
    TreeDecomposition td;
    td.n = 2;
    td.num_nodes = 1;
    td.bags = {{}, {1, 2}};
    NiceTreeDecomposition ntd = make_nice(td);
    CHECK_FALSE(check_nice_structure(ntd));
    CHECK(count_kind(ntd, NodeKind::Leaf) == 1);
    CHECK(count_kind(ntd, NodeKind::Introduce) == 2);
    CHECK(count_kind(ntd, NodeKind::Forget) == 2);
    CHECK(count_kind(ntd, NodeKind::Join) == 0);
    CHECK(ntd.nodes[static_cast<size_t>(ntd.root)].bag.empty());
}

TEST_CASE("make_nice produces joins only at branching nodes") {
    NiceTreeDecomposition two_bags = make_nice(two_bag_path());
    CHECK(count_kind(two_bags, NodeKind::Join) == 0);

    // three branches hanging off a central bag: exactly two joins
    TreeDecomposition star_td;
    star_td.n = 4;
    star_td.num_nodes = 4;
    star_td.bags = {{}, {1}, {1, 2}, {1, 3}, {1, 4}};
    star_td.tree_edges = {{1, 2}, {1, 3}, {1, 4}};
    NiceTreeDecomposition ntd = make_nice(star_td);
    CHECK_FALSE(check_nice_structure(ntd));
    CHECK(count_kind(ntd, NodeKind::Join) == 2);
}

TEST_CASE("make_nice preserves validity and width on random graphs") {
    Rng rng(44);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_er_graph(rng, rand_int(rng, 1, 12), 0.35);
        TreeDecomposition td = build_tree_decomposition(g);
        NiceTreeDecomposition ntd = make_nice(td);
        auto err = check_nice_structure(ntd);
        if (err) FAIL(*err);
        CHECK(ntd.width() == td.width());
        CHECK(validate_decomposition(g, ntd.as_tree_decomposition()).ok());
        CHECK(static_cast<int>(ntd.nodes.size()) <=
              10 * (td.width() + 1) * td.num_nodes + 10);
    }
}
