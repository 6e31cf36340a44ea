#pragma once

// Multi-Colored Clique -> MMDS with membership bound n+1, where n is the
// common color-class size. Every source vertex and every cross-class edge
// gets a head-pair gadget; gadgets are grouped into one block per color
// class and one block per class pair, and four connector vertices per pair
// couple the position selected in a vertex block to the edge selected in
// the pair's block. The generator also builds the forward-direction witness
// from a planted clique and a path decomposition of width at most
// 4*C(k,2) + 5.

#include "reductions.hpp"
#include "tree_decomposition.hpp"

namespace mmds {

// The primary gadget: heads h1, h2 plus rows a_i, d_i. Each of the pairs
// (a_i, d_i), (a_i, h1), (d_i, h2) shares n+2 private degree-2 vertices, so
// leaving both endpoints of a pair out of a solution is never affordable.
struct MccGadget {
    Vertex h1 = 0, h2 = 0;
    std::vector<Vertex> a, d;                      // size n
    std::vector<std::vector<Vertex>> ind_ad;       // per i: n+2 shared vertices of (a_i, d_i)
    std::vector<std::vector<Vertex>> ind_ah1;      // per i: (a_i, h1)
    std::vector<std::vector<Vertex>> ind_dh2;      // per i: (d_i, h2)
};

struct MccBlock {
    bool edge_block = false;
    int color_i = 0, color_j = 0;  // color_j only for edge blocks
    std::vector<MccGadget> gadgets;
    std::vector<std::pair<int, int>> gadget_endpoints;  // edge blocks: position pairs (x, y)
    Vertex f = 0, f_prime = 0;
    std::vector<Vertex> c;     // n+1 hub vertices, all forced into any solution
    std::vector<Vertex> bpend; // (n+1)(n+2) pendants, n+2 per hub
};

struct MccConnectorQuad {
    Vertex r_lo = 0, s_lo = 0;  // superscript i of pair (i, j)
    Vertex r_hi = 0, s_hi = 0;  // superscript j
};

struct MccOutput {
    ReductionOutput out;
    ColoredGraph source;
    int k = 0;           // number of color classes
    int class_size = 0;  // n
    std::vector<MccBlock> vertex_blocks;
    std::vector<MccBlock> edge_blocks;
    std::vector<std::pair<int, int>> pairs;       // (i, j), i < j, matching edge_blocks
    std::vector<MccConnectorQuad> connectors;     // matching pairs
    std::vector<int> position_in_class;           // source vertex -> 1..n
    std::vector<std::vector<Vertex>> classes;     // source classes, ascending ids
};

inline long long mcc_gadget_vertex_count(int n) { return 3ll * n * n + 8ll * n + 2; }
inline long long mcc_block_extra_count(int n) {
    return static_cast<long long>(n + 1) * (n + 3) + 2;
}

namespace detail {

inline MccGadget mcc_build_gadget(GraphBuilder& b, int n, const std::string& prefix) {
    MccGadget g;
    g.h1 = b.fresh(prefix + "h1");
    g.h2 = b.fresh(prefix + "h2");
    for (int i = 1; i <= n; ++i) g.a.push_back(b.fresh(prefix + "a_" + std::to_string(i)));
    for (int i = 1; i <= n; ++i) g.d.push_back(b.fresh(prefix + "d_" + std::to_string(i)));
    auto shared = [&](const std::string& tag, int i) {
        std::vector<Vertex> vs;
        for (int t = 1; t <= n + 2; ++t)
            vs.push_back(b.fresh(prefix + "D(" + tag + "_" + std::to_string(i) + ")/p_" +
                                 std::to_string(t)));
        return vs;
    };
    for (int i = 1; i <= n; ++i) g.ind_ad.push_back(shared("a,d", i));
    for (int i = 1; i <= n; ++i) g.ind_ah1.push_back(shared("a,h1", i));
    for (int i = 1; i <= n; ++i) g.ind_dh2.push_back(shared("d,h2", i));

    b.edge(g.h1, g.h2);
    for (int i = 0; i < n; ++i) {
        b.edge(g.a[static_cast<size_t>(i)], g.h2);
        b.edge(g.d[static_cast<size_t>(i)], g.h1);
        auto pair_gadget = [&](Vertex u, Vertex v, const std::vector<Vertex>& shared_vs) {
            b.edge(u, v);
            for (Vertex p : shared_vs) {
                b.edge(p, u);
                b.edge(p, v);
            }
        };
        pair_gadget(g.a[static_cast<size_t>(i)], g.d[static_cast<size_t>(i)],
                    g.ind_ad[static_cast<size_t>(i)]);
        pair_gadget(g.a[static_cast<size_t>(i)], g.h1, g.ind_ah1[static_cast<size_t>(i)]);
        pair_gadget(g.d[static_cast<size_t>(i)], g.h2, g.ind_dh2[static_cast<size_t>(i)]);
    }
    return g;
}

inline void mcc_add_block_extras(GraphBuilder& b, MccBlock& blk, int n,
                                 const std::string& prefix) {
    blk.f = b.fresh(prefix + "C/f");
    blk.f_prime = b.fresh(prefix + "C/f'");
    for (int p = 1; p <= n + 1; ++p) blk.c.push_back(b.fresh(prefix + "C/c_" + std::to_string(p)));
    for (int q = 1; q <= (n + 1) * (n + 2); ++q)
        blk.bpend.push_back(b.fresh(prefix + "C/b_" + std::to_string(q)));

    for (const auto& g : blk.gadgets)
        for (Vertex at : g.a) b.edge(at, blk.f);
    b.edge(blk.f, blk.f_prime);
    for (Vertex cp : blk.c) b.edge(blk.f_prime, cp);
    for (int p = 1; p <= n + 1; ++p)
        for (int q = (p - 1) * (n + 2) + 1; q <= p * (n + 2); ++q)
            b.edge(blk.c[static_cast<size_t>(p - 1)], blk.bpend[static_cast<size_t>(q - 1)]);
}

}  // namespace detail

// Requires every color class to have the same size; rejects otherwise
// (padding would change n and with it the membership bound).
inline MccOutput reduce_mcc(const ColoredGraph& g) {
    MccOutput red;
    red.source = g;
    red.k = g.num_colors;
    red.classes.resize(static_cast<size_t>(red.k));
    for (int c = 1; c <= red.k; ++c) red.classes[static_cast<size_t>(c - 1)] = g.class_members(c);
    red.class_size = static_cast<int>(red.classes[0].size());
    for (const auto& cls : red.classes)
        if (static_cast<int>(cls.size()) != red.class_size)
            throw std::invalid_argument("color classes must have equal sizes");
    const int n = red.class_size, k = red.k;

    red.position_in_class.assign(static_cast<size_t>(g.graph.n()) + 1, 0);
    for (const auto& cls : red.classes)
        for (size_t idx = 0; idx < cls.size(); ++idx)
            red.position_in_class[static_cast<size_t>(cls[idx])] = static_cast<int>(idx) + 1;

    detail::GraphBuilder b;
    for (int i = 1; i <= k; ++i) {
        MccBlock blk;
        blk.color_i = i;
        std::string bp = "H_" + std::to_string(i) + "/";
        for (int l = 1; l <= n; ++l)
            blk.gadgets.push_back(detail::mcc_build_gadget(b, n, bp + "I_" + std::to_string(l) + "/"));
        detail::mcc_add_block_extras(b, blk, n, bp);
        red.vertex_blocks.push_back(std::move(blk));
    }

    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            red.pairs.emplace_back(i, j);
            MccBlock blk;
            blk.edge_block = true;
            blk.color_i = i;
            blk.color_j = j;
            std::string bp = "H_" + std::to_string(i) + "," + std::to_string(j) + "/";
            // E_{i,j}: cross edges as position pairs, lexicographic.
            std::vector<std::pair<int, int>> epos;
            for (auto [u, v] : g.graph.edges()) {
                int cu = g.color[static_cast<size_t>(u)], cv = g.color[static_cast<size_t>(v)];
                if (std::min(cu, cv) != i || std::max(cu, cv) != j) continue;
                Vertex ui = cu == i ? u : v;
                Vertex uj = cu == i ? v : u;
                epos.emplace_back(red.position_in_class[static_cast<size_t>(ui)],
                                  red.position_in_class[static_cast<size_t>(uj)]);
            }
            std::sort(epos.begin(), epos.end());
            for (auto [x, y] : epos) {
                blk.gadgets.push_back(detail::mcc_build_gadget(
                    b, n, bp + "I(" + std::to_string(x) + "," + std::to_string(y) + ")/"));
                blk.gadget_endpoints.emplace_back(x, y);
            }
            detail::mcc_add_block_extras(b, blk, n, bp);
            red.edge_blocks.push_back(std::move(blk));
        }

    for (auto [i, j] : red.pairs) {
        std::string rp = "R/" + std::to_string(i) + "," + std::to_string(j) + "/";
        MccConnectorQuad q;
        q.r_lo = b.fresh(rp + "r^" + std::to_string(i));
        q.s_lo = b.fresh(rp + "s^" + std::to_string(i));
        q.r_hi = b.fresh(rp + "r^" + std::to_string(j));
        q.s_hi = b.fresh(rp + "s^" + std::to_string(j));
        red.connectors.push_back(q);
    }

    // Threshold wiring. In a vertex block's gadget I_l, the low a-prefix
    // reaches s and the high suffix reaches r; edge-block gadgets reverse
    // the roles around each endpoint position, so matched selections meet
    // every connector exactly n+1 times.
    for (size_t pi = 0; pi < red.pairs.size(); ++pi) {
        auto [i, j] = red.pairs[pi];
        const MccConnectorQuad& q = red.connectors[pi];
        auto wire_vertex_block = [&](int color, Vertex s, Vertex r) {
            const MccBlock& blk = red.vertex_blocks[static_cast<size_t>(color - 1)];
            for (int l = 1; l <= n; ++l) {
                const MccGadget& gd = blk.gadgets[static_cast<size_t>(l - 1)];
                for (int t = 1; t <= l; ++t) b.edge(gd.a[static_cast<size_t>(t - 1)], s);
                for (int t = l; t <= n; ++t) b.edge(gd.a[static_cast<size_t>(t - 1)], r);
            }
        };
        wire_vertex_block(i, q.s_lo, q.r_lo);
        wire_vertex_block(j, q.s_hi, q.r_hi);

        const MccBlock& eb = red.edge_blocks[pi];
        for (size_t gi = 0; gi < eb.gadgets.size(); ++gi) {
            auto [x, y] = eb.gadget_endpoints[gi];
            const MccGadget& gd = eb.gadgets[gi];
            for (int t = 1; t <= x; ++t) b.edge(gd.a[static_cast<size_t>(t - 1)], q.r_lo);
            for (int t = x; t <= n; ++t) b.edge(gd.a[static_cast<size_t>(t - 1)], q.s_lo);
            for (int t = 1; t <= y; ++t) b.edge(gd.a[static_cast<size_t>(t - 1)], q.r_hi);
            for (int t = y; t <= n; ++t) b.edge(gd.a[static_cast<size_t>(t - 1)], q.s_hi);
        }
    }

    red.out = ReductionOutput{Instance(b.build(), n + 1), std::move(b.labels),
                              "mcc k=" + std::to_string(k) + " n=" + std::to_string(n)};
    return red;
}

// Witness from a clique with one vertex per class: the selected gadget of
// each block contributes A and h2, every other gadget contributes D and h1,
// and all c hubs join.
inline Solution mcc_witness(const MccOutput& red, const std::vector<Vertex>& clique) {
    const ColoredGraph& g = red.source;
    if (clique.size() != static_cast<size_t>(red.k))
        throw std::invalid_argument("need one vertex per color class");
    for (int c = 1; c <= red.k; ++c) {
        Vertex v = clique[static_cast<size_t>(c - 1)];
        g.graph.check_vertex(v);
        if (g.color[static_cast<size_t>(v)] != c)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not in class " +
                                        std::to_string(c));
    }
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            if (!g.graph.has_edge(clique[i], clique[j]))
                throw std::invalid_argument("input is not a multicolored clique");

    std::vector<Vertex> members;
    auto take_selected = [&members](const MccGadget& gd) {
        members.insert(members.end(), gd.a.begin(), gd.a.end());
        members.push_back(gd.h2);
    };
    auto take_rest = [&members](const MccGadget& gd) {
        members.insert(members.end(), gd.d.begin(), gd.d.end());
        members.push_back(gd.h1);
    };

    std::vector<int> pos(static_cast<size_t>(red.k) + 1, 0);
    for (int c = 1; c <= red.k; ++c)
        pos[static_cast<size_t>(c)] =
            red.position_in_class[static_cast<size_t>(clique[static_cast<size_t>(c - 1)])];

    for (int c = 1; c <= red.k; ++c) {
        const MccBlock& blk = red.vertex_blocks[static_cast<size_t>(c - 1)];
        for (int l = 1; l <= red.class_size; ++l) {
            const MccGadget& gd = blk.gadgets[static_cast<size_t>(l - 1)];
            if (l == pos[static_cast<size_t>(c)])
                take_selected(gd);
            else
                take_rest(gd);
        }
        members.insert(members.end(), blk.c.begin(), blk.c.end());
    }
    for (size_t pi = 0; pi < red.pairs.size(); ++pi) {
        auto [i, j] = red.pairs[pi];
        const MccBlock& blk = red.edge_blocks[pi];
        std::pair<int, int> want{pos[static_cast<size_t>(i)], pos[static_cast<size_t>(j)]};
        for (size_t gi = 0; gi < blk.gadgets.size(); ++gi) {
            if (blk.gadget_endpoints[gi] == want)
                take_selected(blk.gadgets[gi]);
            else
                take_rest(blk.gadgets[gi]);
        }
        members.insert(members.end(), blk.c.begin(), blk.c.end());
    }
    return Solution(std::move(members));
}

inline std::vector<Vertex> mcc_connector_vertices(const MccOutput& red) {
    std::vector<Vertex> out;
    for (const auto& q : red.connectors) {
        out.push_back(q.r_lo);
        out.push_back(q.s_lo);
        out.push_back(q.r_hi);
        out.push_back(q.s_hi);
    }
    return out;
}

namespace detail {

// Path bags of one gadget, before the heads are added: for each row i, the
// (a_i, h1) shared vertices, then (a_i, d_i), then (d_i, h2).
inline std::vector<std::vector<Vertex>> mcc_gadget_bags(const MccGadget& gd) {
    std::vector<std::vector<Vertex>> bags;
    const int n = static_cast<int>(gd.a.size());
    for (int i = 0; i < n; ++i) {
        for (Vertex e : gd.ind_ah1[static_cast<size_t>(i)])
            bags.push_back({gd.a[static_cast<size_t>(i)], e});
        for (Vertex e : gd.ind_ad[static_cast<size_t>(i)])
            bags.push_back({gd.a[static_cast<size_t>(i)], gd.d[static_cast<size_t>(i)], e});
        for (Vertex e : gd.ind_dh2[static_cast<size_t>(i)])
            bags.push_back({gd.d[static_cast<size_t>(i)], e});
    }
    for (auto& bag : bags) {
        bag.push_back(gd.h1);
        bag.push_back(gd.h2);
    }
    return bags;
}

inline std::vector<std::vector<Vertex>> mcc_block_bags(const MccBlock& blk) {
    std::vector<std::vector<Vertex>> bags;
    for (const auto& gd : blk.gadgets) {
        auto gb = mcc_gadget_bags(gd);
        bags.insert(bags.end(), gb.begin(), gb.end());
    }
    const int n1 = static_cast<int>(blk.c.size());  // n+1
    const int per = static_cast<int>(blk.bpend.size()) / n1;
    for (int p = 0; p < n1; ++p)
        for (int t = 0; t < per; ++t)
            bags.push_back({blk.f_prime, blk.c[static_cast<size_t>(p)],
                            blk.bpend[static_cast<size_t>(p * per + t)]});
    for (auto& bag : bags) bag.push_back(blk.f);
    return bags;
}

}  // namespace detail

// Constructive path decomposition: concatenated per-block paths, heads added
// across each gadget, f across each block, all connectors everywhere.
// Width is at most 4*C(k,2) + 5.
inline TreeDecomposition mcc_path_decomposition(const MccOutput& red) {
    std::vector<std::vector<Vertex>> bags;
    for (const auto& blk : red.vertex_blocks) {
        auto bb = detail::mcc_block_bags(blk);
        bags.insert(bags.end(), bb.begin(), bb.end());
    }
    for (const auto& blk : red.edge_blocks) {
        auto bb = detail::mcc_block_bags(blk);
        bags.insert(bags.end(), bb.begin(), bb.end());
    }
    auto conns = mcc_connector_vertices(red);
    for (auto& bag : bags) {
        bag.insert(bag.end(), conns.begin(), conns.end());
        std::sort(bag.begin(), bag.end());
    }

    TreeDecomposition td;
    td.n = red.out.instance.graph.n();
    td.num_nodes = static_cast<int>(bags.size());
    td.bags.assign(bags.size() + 1, {});
    for (size_t i = 0; i < bags.size(); ++i) td.bags[i + 1] = std::move(bags[i]);
    for (int i = 1; i < td.num_nodes; ++i) td.tree_edges.emplace_back(i, i + 1);
    return td;
}

// A standalone primary gadget and its width-4 path decomposition, mainly for
// auditing the construction in isolation.
struct MccGadgetSample {
    Graph graph;
    MccGadget gadget;
    TreeDecomposition decomposition;
};

inline MccGadgetSample mcc_sample_gadget(int n) {
    detail::GraphBuilder b;
    MccGadget gd = detail::mcc_build_gadget(b, n, "I/");
    MccGadgetSample sample{b.build(), gd, {}};
    auto bags = detail::mcc_gadget_bags(gd);
    for (auto& bag : bags) std::sort(bag.begin(), bag.end());
    sample.decomposition.n = sample.graph.n();
    sample.decomposition.num_nodes = static_cast<int>(bags.size());
    sample.decomposition.bags.assign(bags.size() + 1, {});
    for (size_t i = 0; i < bags.size(); ++i) sample.decomposition.bags[i + 1] = std::move(bags[i]);
    for (int i = 1; i < sample.decomposition.num_nodes; ++i)
        sample.decomposition.tree_edges.emplace_back(i, i + 1);
    return sample;
}

// Closed-form vertex census of a generated instance.
inline long long mcc_expected_vertex_count(const MccOutput& red) {
    const int n = red.class_size;
    long long total = 0;
    for (const auto& blk : red.vertex_blocks)
        total += static_cast<long long>(blk.gadgets.size()) * mcc_gadget_vertex_count(n) +
                 mcc_block_extra_count(n);
    for (const auto& blk : red.edge_blocks)
        total += static_cast<long long>(blk.gadgets.size()) * mcc_gadget_vertex_count(n) +
                 mcc_block_extra_count(n);
    total += 4ll * static_cast<long long>(red.pairs.size());
    return total;
}

}  // namespace mmds
