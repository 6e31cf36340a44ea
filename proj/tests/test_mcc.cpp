#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mmds/formats.hpp>
#include <mmds/instance_gen.hpp>
#include <mmds/mcc_reduction.hpp>

#include <set>

using namespace mmds;

namespace {

// k = 2 classes of size 2 with exactly the cross edge 1-3 (positions 1 and 1).
ColoredGraph tiny_source() {
    return ColoredGraph(Graph::from_edges(4, {{1, 3}}), {0, 1, 1, 2, 2});
}

}  // namespace

TEST_CASE("census of the k=2, n=2, single-edge instance") {
    MccOutput red = reduce_mcc(tiny_source());
    CHECK(red.k == 2);
    CHECK(red.class_size == 2);
    CHECK(red.out.instance.k == 3);  // n + 1

    CHECK(mcc_gadget_vertex_count(2) == 30);
    CHECK(mcc_block_extra_count(2) == 17);
    // vertex blocks 2*30+17 = 77 each, edge block 30+17 = 47, 4 connectors
    CHECK(red.out.instance.graph.n() == 77 + 77 + 47 + 4);
    CHECK(mcc_expected_vertex_count(red) == 205);

    REQUIRE(red.vertex_blocks.size() == 2);
    REQUIRE(red.edge_blocks.size() == 1);
    CHECK(red.edge_blocks[0].gadgets.size() == 1);
    CHECK(red.edge_blocks[0].gadget_endpoints[0] == std::pair<int, int>{1, 1});

    // labels are total and unique
    REQUIRE(red.out.vertex_labels.size() == static_cast<size_t>(red.out.instance.graph.n()));
    std::set<std::string> seen(red.out.vertex_labels.begin(), red.out.vertex_labels.end());
    CHECK(seen.size() == red.out.vertex_labels.size());
}

TEST_CASE("degrees match the construction arithmetic") {
    // k=2, n=2, one cross edge between the first vertices of both classes.
    MccOutput red = reduce_mcc(tiny_source());
    const Graph& h = red.out.instance.graph;
    const int n = 2;

    for (const auto& blk : red.vertex_blocks) {
        for (int l = 1; l <= n; ++l) {
            const MccGadget& gd = blk.gadgets[static_cast<size_t>(l - 1)];
            // heads: the partner head, both rows, and n+2 shared vertices per row pair
            CHECK(h.degree(gd.h1) == 1 + 2 * n + n * (n + 2));
            CHECK(h.degree(gd.h2) == 1 + 2 * n + n * (n + 2));
            for (int t = 1; t <= n; ++t) {
                // a_t: h1, h2, d_t, two shared groups, f, and one connector per
                // pair (two when t equals the gadget index)
                int conns = (red.k - 1) * (1 + (t == l ? 1 : 0));
                CHECK(h.degree(gd.a[static_cast<size_t>(t - 1)]) ==
                      3 + 2 * (n + 2) + 1 + conns);
                CHECK(h.degree(gd.d[static_cast<size_t>(t - 1)]) == 3 + 2 * (n + 2));
            }
            for (const auto& group : {gd.ind_ad, gd.ind_ah1, gd.ind_dh2})
                for (const auto& vs : group)
                    for (Vertex p : vs) CHECK(h.degree(p) == 2);
        }
        CHECK(h.degree(blk.f) == n * n + 1);
        CHECK(h.degree(blk.f_prime) == 1 + (n + 1));
        for (Vertex cp : blk.c) CHECK(h.degree(cp) == n + 3);
        for (Vertex bq : blk.bpend) CHECK(h.degree(bq) == 1);
    }

    // edge block holds one gadget for the edge at positions (1, 1)
    const MccBlock& eb = red.edge_blocks[0];
    CHECK(h.degree(eb.f) == n * 1 + 1);

    // connector degrees: a vertex block contributes l (to s) and n-l+1 (to r)
    // per gadget; the edge gadget contributes n-x+1 to s and x to r.
    const MccConnectorQuad& q = red.connectors[0];
    CHECK(h.degree(q.s_lo) == (1 + 2) + 2);  // sum of l + (n - 1 + 1)
    CHECK(h.degree(q.r_lo) == (2 + 1) + 1);  // sum of (n - l + 1) + x
    CHECK(h.degree(q.s_hi) == (1 + 2) + 2);
    CHECK(h.degree(q.r_hi) == (2 + 1) + 1);
}

TEST_CASE("unequal class sizes are rejected") {
    ColoredGraph bad(Graph::from_edges(3, {{1, 3}}), {0, 1, 1, 2});
    CHECK_THROWS_AS(reduce_mcc(bad), std::invalid_argument);
}

TEST_CASE("witness from the planted clique is feasible with tight connectors") {
    MccOutput red = reduce_mcc(tiny_source());
    Solution w = mcc_witness(red, {1, 3});
    auto verdict = is_feasible(red.out.instance, w);
    CHECK(verdict.ok());
    for (Vertex cv : mcc_connector_vertices(red))
        CHECK(membership(red.out.instance.graph, w, cv) == 3);

    // heads of every gadget sit at exactly the bound
    for (const auto& blk : red.vertex_blocks)
        for (const auto& gd : blk.gadgets) {
            CHECK(membership(red.out.instance.graph, w, gd.h1) == 3);
            CHECK(membership(red.out.instance.graph, w, gd.h2) == 3);
        }

    CHECK_THROWS_AS(mcc_witness(red, {2, 4}), std::invalid_argument);  // not adjacent
    CHECK_THROWS_AS(mcc_witness(red, {1}), std::invalid_argument);
    CHECK_THROWS_AS(mcc_witness(red, {3, 1}), std::invalid_argument);  // wrong classes
}

TEST_CASE("planted triangles at k=3 verify at membership 3") {
    Rng rng(91);
    for (int t = 0; t < 5; ++t) {
        auto planted = random_planted_clique(rng, 3, 2, 0.4);
        MccOutput red = reduce_mcc(planted.graph);
        CHECK(red.out.instance.k == 3);
        Solution w = mcc_witness(red, planted.clique);
        CHECK(is_feasible(red.out.instance, w).ok());
        for (Vertex cv : mcc_connector_vertices(red))
            CHECK(membership(red.out.instance.graph, w, cv) == 3);
    }
}

TEST_CASE("standalone gadget has pathwidth at most four") {
    for (int n = 1; n <= 4; ++n) {
        MccGadgetSample sample = mcc_sample_gadget(n);
        CHECK(sample.graph.n() == mcc_gadget_vertex_count(n));
        auto v = validate_decomposition(sample.graph, sample.decomposition, /*path_only=*/true);
        REQUIRE(v.ok());
        CHECK(v.width <= 4);
    }
    CHECK(validate_decomposition(mcc_sample_gadget(2).graph,
                                 mcc_sample_gadget(2).decomposition, true)
              .width == 4);
}

TEST_CASE("single block stays within pathwidth five") {
    // one color class of size 2: one vertex block, no connectors
    Graph g(2);
    g.finish();
    ColoredGraph single(std::move(g), {0, 1, 1});
    MccOutput red = reduce_mcc(single);
    CHECK(red.pairs.empty());
    TreeDecomposition td = mcc_path_decomposition(red);
    auto v = validate_decomposition(red.out.instance.graph, td, /*path_only=*/true);
    REQUIRE(v.ok());
    CHECK(v.width <= 5);
}

TEST_CASE("full path decomposition validates within 4*C(k,2)+5") {
    Rng rng(92);
    for (int k = 2; k <= 3; ++k) {
        auto planted = random_planted_clique(rng, k, 2, 0.5);
        MccOutput red = reduce_mcc(planted.graph);
        TreeDecomposition td = mcc_path_decomposition(red);
        auto v = validate_decomposition(red.out.instance.graph, td, /*path_only=*/true);
        REQUIRE(v.ok());
        CHECK(v.width <= 4 * (k * (k - 1) / 2) + 5);
    }
}

TEST_CASE("empty edge sets give blocks with zero gadgets") {
    Graph g(4);
    g.finish();
    ColoredGraph no_edges(std::move(g), {0, 1, 1, 2, 2});
    MccOutput red = reduce_mcc(no_edges);
    REQUIRE(red.edge_blocks.size() == 1);
    CHECK(red.edge_blocks[0].gadgets.empty());
    CHECK(red.out.instance.graph.n() == 77 + 77 + 17 + 4);
    CHECK(mcc_expected_vertex_count(red) == red.out.instance.graph.n());
    TreeDecomposition td = mcc_path_decomposition(red);
    CHECK(validate_decomposition(red.out.instance.graph, td, true).ok());
}

TEST_CASE("generation is deterministic") {
    auto a = reduce_mcc(tiny_source());
    auto b = reduce_mcc(tiny_source());
    CHECK(serialize_graph(a.out.instance.graph) == serialize_graph(b.out.instance.graph));
    CHECK(a.out.vertex_labels == b.out.vertex_labels);
}
