#pragma once

// Dynamic program over a nice tree decomposition. A state at a node is a
// pair (c, d): c marks which bag vertices are in the solution, d records the
// current membership |N[u] ∩ S| of each bag vertex u, capped at k (a set
// pushing any membership past k can never recover, so such states are
// dropped). A table bit is one iff some S ⊆ X_i⁺ induces the state while
// every already-forgotten vertex has membership in [1, k].
//
// States are packed into a mixed-radix integer with one digit per bag
// vertex: digit = c·(k+1) + d, radix 2(k+1). Tables hold the sorted codes
// of the reachable one-states; each node's addressable state space still
// has exactly (2(k+1))^|bag| states.

#include <map>
#include <optional>

#include "checker.hpp"
#include "tree_decomposition.hpp"

namespace mmds {

inline uint64_t dp_state_radix(int k) { return 2ull * (static_cast<uint64_t>(k) + 1); }

// (2(k+1))^bag_size, or nullopt when it does not fit in 63 bits.
inline std::optional<uint64_t> dp_state_space_size(int k, int bag_size) {
    uint64_t r = dp_state_radix(k);
    uint64_t out = 1;
    for (int i = 0; i < bag_size; ++i) {
        if (out > (1ull << 62) / r) return std::nullopt;
        out *= r;
    }
    return out;
}

inline uint64_t dp_encode_state(int k, const std::vector<int>& c, const std::vector<int>& d) {
    const uint64_t r = dp_state_radix(k);
    uint64_t code = 0;
    for (size_t p = c.size(); p-- > 0;)
        code = code * r + static_cast<uint64_t>(c[p]) * (static_cast<uint64_t>(k) + 1) +
               static_cast<uint64_t>(d[p]);
    return code;
}

inline void dp_decode_state(int k, uint64_t code, int bag_size, std::vector<int>& c,
                            std::vector<int>& d) {
    const uint64_t r = dp_state_radix(k);
    c.assign(static_cast<size_t>(bag_size), 0);
    d.assign(static_cast<size_t>(bag_size), 0);
    for (int p = 0; p < bag_size; ++p) {
        uint64_t digit = code % r;
        code /= r;
        c[static_cast<size_t>(p)] = static_cast<int>(digit / (static_cast<uint64_t>(k) + 1));
        d[static_cast<size_t>(p)] = static_cast<int>(digit % (static_cast<uint64_t>(k) + 1));
    }
}

struct DpOptions {
    uint64_t max_stored_states = 1ull << 26;  // refusal threshold across live tables
    bool keep_tables = false;                 // retain tables for reconstruction / audits
};

struct DpResult {
    bool feasible = false;
    std::vector<std::vector<uint64_t>> tables;  // per node, sorted codes (if kept)
};

namespace detail {

inline int position_of(const std::vector<Vertex>& bag, Vertex v) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    if (it == bag.end() || *it != v) throw std::logic_error("vertex not in bag");
    return static_cast<int>(it - bag.begin());
}

inline void sort_unique(std::vector<uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Post-order of the nice tree (children before parents).
inline std::vector<int> dp_post_order(const NiceTreeDecomposition& ntd) {
    std::vector<int> order;
    order.reserve(ntd.nodes.size());
    std::vector<std::pair<int, size_t>> stack{{ntd.root, 0}};
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        const auto& children = ntd.nodes[static_cast<size_t>(node)].children;
        if (next < children.size()) {
            int c = children[next++];
            stack.emplace_back(c, 0);
        } else {
            order.push_back(node);
            stack.pop_back();
        }
    }
    return order;
}

struct DpEngine {
    const Graph& g;
    const int k;
    const NiceTreeDecomposition& ntd;
    const DpOptions& opts;
    std::vector<std::vector<uint64_t>> tables;
    uint64_t live_states = 0;

    DpEngine(const Instance& inst, const NiceTreeDecomposition& ntd_, const DpOptions& opts_)
        : g(inst.graph), k(inst.k), ntd(ntd_), opts(opts_),
          tables(ntd_.nodes.size()) {}

    void charge(size_t added) {
        live_states += added;
        if (live_states > opts.max_stored_states)
            throw BudgetError("treewidth DP refused: stored state count exceeds budget");
    }

    // Fail fast while a table is still being generated.
    void guard(size_t pending) const {
        if (live_states + pending > opts.max_stored_states)
            throw BudgetError("treewidth DP refused: stored state count exceeds budget");
    }

    void release(int node) {
        if (opts.keep_tables) return;
        live_states -= tables[static_cast<size_t>(node)].size();
        tables[static_cast<size_t>(node)] = {};
        tables[static_cast<size_t>(node)].shrink_to_fit();
    }

    // Bitmask over bag positions of N(v) ∩ bag.
    uint32_t open_adj_mask(const std::vector<Vertex>& bag, Vertex v) const {
        uint32_t mask = 0;
        for (size_t p = 0; p < bag.size(); ++p)
            if (bag[p] != v && g.has_edge(v, bag[p])) mask |= 1u << p;
        return mask;
    }

    void compute_leaf(int node) {
        tables[static_cast<size_t>(node)] = {0};
        charge(1);
    }

    void compute_introduce(int node) {
        const auto& nd = ntd.nodes[static_cast<size_t>(node)];
        const int child = nd.children[0];
        const auto& bag = nd.bag;
        const auto& cbag = ntd.nodes[static_cast<size_t>(child)].bag;
        const Vertex v = nd.vertex;
        const int pos_v = position_of(bag, v);
        const int b = static_cast<int>(cbag.size());
        const uint32_t vmask = open_adj_mask(cbag, v);  // child positions adjacent to v

        std::vector<uint64_t> out;
        out.reserve(2 * tables[static_cast<size_t>(child)].size());
        std::vector<int> c, d, d1;
        for (uint64_t code : tables[static_cast<size_t>(child)]) {
            guard(out.size());
            dp_decode_state(k, code, b, c, d);
            int sel = 0;
            for (int q = 0; q < b; ++q)
                if ((vmask >> q & 1) && c[static_cast<size_t>(q)]) ++sel;

            auto emit = [&](int cv, int dv, const std::vector<int>& dd) {
                std::vector<int> pc(c), pd(dd);
                pc.insert(pc.begin() + pos_v, cv);
                pd.insert(pd.begin() + pos_v, dv);
                out.push_back(dp_encode_state(k, pc, pd));
            };

            // v left out: its membership is the selected bag neighbors.
            if (sel <= k) emit(0, sel, d);
            // v taken: bag neighbors each gain one membership, v sees itself.
            if (sel + 1 <= k) {
                d1 = d;
                bool ok = true;
                for (int q = 0; q < b && ok; ++q)
                    if (vmask >> q & 1) {
                        if (++d1[static_cast<size_t>(q)] > k) ok = false;
                    }
                if (ok) emit(1, sel + 1, d1);
            }
        }
        sort_unique(out);
        charge(out.size());
        tables[static_cast<size_t>(node)] = std::move(out);
        release(child);
    }

    void compute_forget(int node) {
        const auto& nd = ntd.nodes[static_cast<size_t>(node)];
        const int child = nd.children[0];
        const auto& cbag = ntd.nodes[static_cast<size_t>(child)].bag;
        const int pos_v = position_of(cbag, nd.vertex);
        const uint64_t r = dp_state_radix(k);
        uint64_t low_mod = 1;
        for (int i = 0; i < pos_v; ++i) low_mod *= r;

        std::vector<uint64_t> out;
        out.reserve(tables[static_cast<size_t>(child)].size());
        for (uint64_t code : tables[static_cast<size_t>(child)]) {
            guard(out.size());
            uint64_t digit = code / low_mod % r;
            int dv = static_cast<int>(digit % (static_cast<uint64_t>(k) + 1));
            if (dv == 0) continue;  // the forgotten vertex must be dominated by now
            uint64_t low = code % low_mod;
            uint64_t high = code / (low_mod * r);
            out.push_back(high * low_mod + low);
        }
        sort_unique(out);
        charge(out.size());
        tables[static_cast<size_t>(node)] = std::move(out);
        release(child);
    }

    struct DecodedGroup {
        std::vector<uint64_t> codes;
        std::vector<int> d;  // flattened, bag_size per state
    };

    // Child states grouped by their c-bits; d vectors pre-decoded.
    std::map<uint32_t, DecodedGroup> group_by_selection(int child, int b) {
        std::map<uint32_t, DecodedGroup> groups;
        std::vector<int> c, d;
        for (uint64_t code : tables[static_cast<size_t>(child)]) {
            dp_decode_state(k, code, b, c, d);
            uint32_t cmask = 0;
            for (int q = 0; q < b; ++q)
                if (c[static_cast<size_t>(q)]) cmask |= 1u << q;
            auto& grp = groups[cmask];
            grp.codes.push_back(code);
            grp.d.insert(grp.d.end(), d.begin(), d.end());
        }
        return groups;
    }

    void compute_join(int node) {
        const auto& nd = ntd.nodes[static_cast<size_t>(node)];
        const int left = nd.children[0], right = nd.children[1];
        const auto& bag = nd.bag;
        const int b = static_cast<int>(bag.size());

        // Closed neighborhood of each bag vertex within the bag.
        std::vector<uint32_t> closed(static_cast<size_t>(b));
        for (int q = 0; q < b; ++q)
            closed[static_cast<size_t>(q)] =
                open_adj_mask(bag, bag[static_cast<size_t>(q)]) | (1u << q);

        auto lgroups = group_by_selection(left, b);
        auto rgroups = group_by_selection(right, b);

        // Both subtrees overlap exactly in the bag, so combining states with
        // a common c double-counts |N[u] ∩ c⁻¹(1)| once per vertex.
        std::vector<uint64_t> out;
        std::vector<int> c(static_cast<size_t>(b)), d(static_cast<size_t>(b));
        for (auto& [cmask, lg] : lgroups) {
            auto rit = rgroups.find(cmask);
            if (rit == rgroups.end()) continue;
            const auto& rg = rit->second;
            std::vector<int> base(static_cast<size_t>(b));
            for (int q = 0; q < b; ++q)
                base[static_cast<size_t>(q)] =
                    __builtin_popcount(closed[static_cast<size_t>(q)] & cmask);
            for (int q = 0; q < b; ++q)
                c[static_cast<size_t>(q)] = cmask >> q & 1;

            const size_t nl = lg.codes.size(), nr = rg.codes.size();
            for (size_t i = 0; i < nl; ++i) {
                guard(out.size());
                const int* dl = lg.d.data() + i * static_cast<size_t>(b);
                for (size_t j = 0; j < nr; ++j) {
                    const int* dr = rg.d.data() + j * static_cast<size_t>(b);
                    bool ok = true;
                    for (int q = 0; q < b && ok; ++q) {
                        int sum = dl[q] + dr[q] - base[static_cast<size_t>(q)];
                        if (sum > k) ok = false;
                        d[static_cast<size_t>(q)] = sum;
                    }
                    if (ok) out.push_back(dp_encode_state(k, c, d));
                }
            }
        }
        sort_unique(out);
        charge(out.size());
        tables[static_cast<size_t>(node)] = std::move(out);
        release(left);
        release(right);
    }

    void run() {
        for (int node : dp_post_order(ntd)) {
            const auto& nd = ntd.nodes[static_cast<size_t>(node)];
            if (!dp_state_space_size(k, static_cast<int>(nd.bag.size())))
                throw BudgetError("treewidth DP refused: state space exceeds 63 bits");
            switch (nd.kind) {
                case NodeKind::Leaf: compute_leaf(node); break;
                case NodeKind::Introduce: compute_introduce(node); break;
                case NodeKind::Forget: compute_forget(node); break;
                case NodeKind::Join: compute_join(node); break;
            }
        }
    }
};

inline void dp_check_inputs(const Instance& inst, const NiceTreeDecomposition& ntd) {
    if (ntd.n != inst.graph.n())
        throw std::invalid_argument("decomposition vertex count does not match graph");
    if (auto err = check_nice_structure(ntd))
        throw std::invalid_argument("not a nice decomposition: " + *err);
    auto verdict = validate_decomposition(inst.graph, ntd.as_tree_decomposition());
    if (!verdict.ok())
        throw std::invalid_argument("decomposition does not match graph: " +
                                    verdict.to_string());
}

}  // namespace detail

inline DpResult dp_run(const Instance& inst, const NiceTreeDecomposition& ntd,
                       const DpOptions& opts = {}) {
    detail::dp_check_inputs(inst, ntd);
    detail::DpEngine engine(inst, ntd, opts);
    engine.run();
    DpResult res;
    const auto& root_table = engine.tables[static_cast<size_t>(ntd.root)];
    res.feasible = std::binary_search(root_table.begin(), root_table.end(), 0ull);
    if (opts.keep_tables) res.tables = std::move(engine.tables);
    return res;
}

inline bool dp_feasible(const Instance& inst, const NiceTreeDecomposition& ntd,
                        const DpOptions& opts = {}) {
    return dp_run(inst, ntd, opts).feasible;
}

// Walks the tables root-to-leaves picking, at every choice point, the
// consistent child state with the least encoding; collects the solution
// from the forget decisions (every vertex is forgotten exactly once).
inline std::optional<Solution> dp_witness(const Instance& inst,
                                          const NiceTreeDecomposition& ntd,
                                          const DpOptions& opts = {}) {
    DpOptions kept = opts;
    kept.keep_tables = true;
    DpResult res = dp_run(inst, ntd, kept);
    if (!res.feasible) return std::nullopt;

    const Graph& g = inst.graph;
    const int k = inst.k;
    const uint64_t r = dp_state_radix(k);
    std::vector<Vertex> members;

    std::vector<std::pair<int, uint64_t>> stack{{ntd.root, 0}};
    std::vector<int> c, d;
    while (!stack.empty()) {
        auto [node, code] = stack.back();
        stack.pop_back();
        const auto& nd = ntd.nodes[static_cast<size_t>(node)];
        switch (nd.kind) {
            case NodeKind::Leaf: break;
            case NodeKind::Introduce: {
                const int child = nd.children[0];
                const auto& cbag = ntd.nodes[static_cast<size_t>(child)].bag;
                const int b = static_cast<int>(cbag.size());
                const int pos_v = detail::position_of(nd.bag, nd.vertex);
                dp_decode_state(k, code, b + 1, c, d);
                int cv = c[static_cast<size_t>(pos_v)];
                c.erase(c.begin() + pos_v);
                d.erase(d.begin() + pos_v);
                if (cv == 1)
                    for (int q = 0; q < b; ++q)
                        if (g.has_edge(nd.vertex, cbag[static_cast<size_t>(q)]))
                            --d[static_cast<size_t>(q)];
                stack.emplace_back(child, dp_encode_state(k, c, d));
                break;
            }
            case NodeKind::Forget: {
                const int child = nd.children[0];
                const auto& cbag = ntd.nodes[static_cast<size_t>(child)].bag;
                const int pos_v = detail::position_of(cbag, nd.vertex);
                uint64_t low_mod = 1;
                for (int i = 0; i < pos_v; ++i) low_mod *= r;
                uint64_t low = code % low_mod, high = code / low_mod;
                const auto& table = res.tables[static_cast<size_t>(child)];
                bool found = false;
                for (int a = 0; a <= 1 && !found; ++a)
                    for (int bval = 1; bval <= k && !found; ++bval) {
                        uint64_t digit =
                            static_cast<uint64_t>(a) * (static_cast<uint64_t>(k) + 1) +
                            static_cast<uint64_t>(bval);
                        uint64_t cand = (high * r + digit) * low_mod + low;
                        if (std::binary_search(table.begin(), table.end(), cand)) {
                            if (a == 1) members.push_back(nd.vertex);
                            stack.emplace_back(child, cand);
                            found = true;
                        }
                    }
                if (!found) throw std::logic_error("forget reconstruction failed");
                break;
            }
            case NodeKind::Join: {
                const int left = nd.children[0], right = nd.children[1];
                const auto& bag = nd.bag;
                const int b = static_cast<int>(bag.size());
                std::vector<int> pc, pd;
                dp_decode_state(k, code, b, pc, pd);
                std::vector<int> base(static_cast<size_t>(b));
                for (int q = 0; q < b; ++q) {
                    int cnt = pc[static_cast<size_t>(q)];
                    for (int q2 = 0; q2 < b; ++q2)
                        if (q2 != q && pc[static_cast<size_t>(q2)] &&
                            g.has_edge(bag[static_cast<size_t>(q)],
                                       bag[static_cast<size_t>(q2)]))
                            ++cnt;
                    base[static_cast<size_t>(q)] = cnt;
                }
                const auto& ltable = res.tables[static_cast<size_t>(left)];
                const auto& rtable = res.tables[static_cast<size_t>(right)];
                bool found = false;
                std::vector<int> lc, ld, rd(static_cast<size_t>(b));
                for (uint64_t lcode : ltable) {
                    dp_decode_state(k, lcode, b, lc, ld);
                    if (lc != pc) continue;
                    bool ok = true;
                    for (int q = 0; q < b && ok; ++q) {
                        if (ld[static_cast<size_t>(q)] < base[static_cast<size_t>(q)] ||
                            ld[static_cast<size_t>(q)] > pd[static_cast<size_t>(q)]) {
                            ok = false;
                            break;
                        }
                        rd[static_cast<size_t>(q)] = pd[static_cast<size_t>(q)] -
                                                     ld[static_cast<size_t>(q)] +
                                                     base[static_cast<size_t>(q)];
                    }
                    if (!ok) continue;
                    uint64_t rcode = dp_encode_state(k, pc, rd);
                    if (std::binary_search(rtable.begin(), rtable.end(), rcode)) {
                        stack.emplace_back(left, lcode);
                        stack.emplace_back(right, rcode);
                        found = true;
                        break;
                    }
                }
                if (!found) throw std::logic_error("join reconstruction failed");
                break;
            }
        }
    }
    return Solution(std::move(members));
}

// X_i⁺ per node: the union of bags in each node's subtree, sorted.
inline std::vector<std::vector<Vertex>> dp_subtree_vertices(const NiceTreeDecomposition& ntd) {
    std::vector<std::vector<Vertex>> out(ntd.nodes.size());
    for (int node : detail::dp_post_order(ntd)) {
        const auto& nd = ntd.nodes[static_cast<size_t>(node)];
        std::vector<Vertex> acc = nd.bag;
        for (int child : nd.children) {
            std::vector<Vertex> merged;
            std::set_union(acc.begin(), acc.end(), out[static_cast<size_t>(child)].begin(),
                           out[static_cast<size_t>(child)].end(), std::back_inserter(merged));
            acc = std::move(merged);
        }
        out[static_cast<size_t>(node)] = std::move(acc);
    }
    return out;
}

}  // namespace mmds
