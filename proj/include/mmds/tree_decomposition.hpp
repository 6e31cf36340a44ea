#pragma once

// Tree decompositions: min-fill heuristic construction, validation of the
// three decomposition conditions (coverage of vertices, coverage of edges,
// connected occurrence subtrees), PACE-style .td text format, and the
// nice-form transformation with leaf / introduce / forget / join nodes.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "formats.hpp"
#include "graph.hpp"

namespace mmds {

struct TreeDecomposition {
    int num_nodes = 0;                    // nodes are 1..num_nodes
    int n = 0;                            // vertex count of the decomposed graph
    std::vector<std::vector<Vertex>> bags;  // 1-indexed, each sorted
    std::vector<std::pair<int, int>> tree_edges;

    int width() const {
        size_t largest = 0;
        for (int i = 1; i <= num_nodes; ++i)
            largest = std::max(largest, bags[static_cast<size_t>(i)].size());
        return static_cast<int>(largest) - 1;
    }

    std::vector<std::vector<int>> node_adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<size_t>(num_nodes) + 1);
        for (auto [a, b] : tree_edges) {
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        }
        return adj;
    }
};

struct TdVerdict {
    enum class Kind {
        Valid,
        Malformed,                // node/vertex ids out of range, no nodes
        NotATree,                 // tree_edges do not form a tree
        NotAPath,                 // path_only requested but a node has degree > 2
        UncoveredVertex,
        UncoveredEdge,
        DisconnectedOccurrence,
    };
    Kind kind = Kind::Valid;
    Vertex vertex = 0;
    std::pair<Vertex, Vertex> edge{0, 0};
    int width = -1;

    bool ok() const { return kind == Kind::Valid; }

    std::string to_string() const {
        switch (kind) {
            case Kind::Valid: return "VALID width " + std::to_string(width);
            case Kind::Malformed: return "INVALID malformed decomposition";
            case Kind::NotATree: return "INVALID decomposition graph is not a tree";
            case Kind::NotAPath: return "INVALID decomposition tree is not a path";
            case Kind::UncoveredVertex:
                return "INVALID vertex " + std::to_string(vertex) + " in no bag";
            case Kind::UncoveredEdge:
                return "INVALID edge " + std::to_string(edge.first) + " " +
                       std::to_string(edge.second) + " in no bag";
            case Kind::DisconnectedOccurrence:
                return "INVALID occurrence of vertex " + std::to_string(vertex) +
                       " is not connected";
        }
        return "";
    }
};

inline TdVerdict validate_decomposition(const Graph& g, const TreeDecomposition& td,
                                        bool path_only = false) {
    TdVerdict bad;
    if (td.num_nodes < 1 || td.bags.size() != static_cast<size_t>(td.num_nodes) + 1) {
        bad.kind = TdVerdict::Kind::Malformed;
        return bad;
    }
    for (int i = 1; i <= td.num_nodes; ++i)
        for (Vertex v : td.bags[static_cast<size_t>(i)])
            if (v < 1 || v > g.n()) {
                bad.kind = TdVerdict::Kind::Malformed;
                return bad;
            }
    for (auto [a, b] : td.tree_edges)
        if (a < 1 || a > td.num_nodes || b < 1 || b > td.num_nodes || a == b) {
            bad.kind = TdVerdict::Kind::Malformed;
            return bad;
        }

    // Tree check: exactly num_nodes - 1 edges and connected.
    auto adj = td.node_adjacency();
    {
        if (static_cast<int>(td.tree_edges.size()) != td.num_nodes - 1) {
            bad.kind = TdVerdict::Kind::NotATree;
            return bad;
        }
        std::vector<char> seen(static_cast<size_t>(td.num_nodes) + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++reached;
            for (int y : adj[static_cast<size_t>(x)])
                if (!seen[static_cast<size_t>(y)]) {
                    seen[static_cast<size_t>(y)] = 1;
                    stack.push_back(y);
                }
        }
        if (reached != td.num_nodes) {
            bad.kind = TdVerdict::Kind::NotATree;
            return bad;
        }
    }
    if (path_only) {
        for (int i = 1; i <= td.num_nodes; ++i)
            if (adj[static_cast<size_t>(i)].size() > 2) {
                bad.kind = TdVerdict::Kind::NotAPath;
                return bad;
            }
    }

    // Condition (i): every vertex occurs in some bag.
    std::vector<std::vector<int>> occurrence(static_cast<size_t>(g.n()) + 1);
    for (int i = 1; i <= td.num_nodes; ++i)
        for (Vertex v : td.bags[static_cast<size_t>(i)])
            occurrence[static_cast<size_t>(v)].push_back(i);
    for (Vertex v = 1; v <= g.n(); ++v)
        if (occurrence[static_cast<size_t>(v)].empty()) {
            bad.kind = TdVerdict::Kind::UncoveredVertex;
            bad.vertex = v;
            return bad;
        }

    // Condition (ii): every edge lies inside some bag.
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        const auto& occ_u = occurrence[static_cast<size_t>(u)];
        for (int i : occ_u) {
            const auto& bag = td.bags[static_cast<size_t>(i)];
            if (std::binary_search(bag.begin(), bag.end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            bad.kind = TdVerdict::Kind::UncoveredEdge;
            bad.edge = {u, v};
            return bad;
        }
    }

    // Condition (iii): occurrence nodes of each vertex induce a connected subtree.
    {
        std::vector<char> in_occ(static_cast<size_t>(td.num_nodes) + 1, 0);
        for (Vertex v = 1; v <= g.n(); ++v) {
            const auto& occ = occurrence[static_cast<size_t>(v)];
            for (int i : occ) in_occ[static_cast<size_t>(i)] = 1;
            std::vector<int> stack{occ.front()};
            std::vector<char> seen(static_cast<size_t>(td.num_nodes) + 1, 0);
            seen[static_cast<size_t>(occ.front())] = 1;
            size_t reached = 0;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                ++reached;
                for (int y : adj[static_cast<size_t>(x)])
                    if (in_occ[static_cast<size_t>(y)] && !seen[static_cast<size_t>(y)]) {
                        seen[static_cast<size_t>(y)] = 1;
                        stack.push_back(y);
                    }
            }
            for (int i : occ) in_occ[static_cast<size_t>(i)] = 0;
            if (reached != occ.size()) {
                bad.kind = TdVerdict::Kind::DisconnectedOccurrence;
                bad.vertex = v;
                return bad;
            }
        }
    }

    TdVerdict good;
    good.width = td.width();
    return good;
}

// Min-fill elimination ordering, ties broken by lowest vertex id. The
// resulting decomposition is valid by construction; no width optimality
// is promised.
inline TreeDecomposition build_tree_decomposition(const Graph& g) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("graph must have at least one vertex");

    std::vector<VertexBitset> row(static_cast<size_t>(n) + 1, VertexBitset(n));
    for (Vertex v = 1; v <= n; ++v)
        for (Vertex u : g.neighbors(v)) row[static_cast<size_t>(v)].set(u);
    std::vector<char> alive(static_cast<size_t>(n) + 1, 1);

    auto fill_in = [&](Vertex v) {
        // Ordered non-adjacent pairs among alive neighbors, halved.
        long long pairs = 0;
        std::vector<Vertex> nb;
        for (Vertex u = 1; u <= n; ++u)
            if (alive[static_cast<size_t>(u)] && row[static_cast<size_t>(v)].test(u))
                nb.push_back(u);
        for (Vertex u : nb)
            for (Vertex w : nb)
                if (u < w && !row[static_cast<size_t>(u)].test(w)) ++pairs;
        return pairs;
    };

    TreeDecomposition td;
    td.n = n;
    td.num_nodes = n;
    td.bags.assign(static_cast<size_t>(n) + 1, {});
    std::vector<int> node_of(static_cast<size_t>(n) + 1, 0);  // vertex -> elimination position
    std::vector<int> parent(static_cast<size_t>(n) + 1, 0);

    for (int step = 1; step <= n; ++step) {
        Vertex best = 0;
        long long best_fill = -1;
        for (Vertex v = 1; v <= n; ++v) {
            if (!alive[static_cast<size_t>(v)]) continue;
            long long f = fill_in(v);
            if (best == 0 || f < best_fill) {
                best = v;
                best_fill = f;
            }
        }
        std::vector<Vertex> bag;
        for (Vertex u = 1; u <= n; ++u)
            if (alive[static_cast<size_t>(u)] &&
                (u == best || row[static_cast<size_t>(best)].test(u)))
                bag.push_back(u);
        td.bags[static_cast<size_t>(step)] = bag;
        node_of[static_cast<size_t>(best)] = step;
        // Make the remaining neighborhood a clique, then drop the vertex.
        for (Vertex u : bag)
            for (Vertex w : bag)
                if (u != w && u != best && w != best) row[static_cast<size_t>(u)].set(w);
        alive[static_cast<size_t>(best)] = 0;
    }

    // Attach each node to the bag of the earliest-eliminated remaining
    // neighbor; parentless nodes chain to the final bag.
    for (int i = 1; i <= n; ++i) {
        int next = 0;
        for (Vertex u : td.bags[static_cast<size_t>(i)]) {
            int pos = node_of[static_cast<size_t>(u)];
            if (pos > i && (next == 0 || pos < next)) next = pos;
        }
        parent[static_cast<size_t>(i)] = next;
    }
    for (int i = 1; i <= n; ++i) {
        if (parent[static_cast<size_t>(i)] != 0)
            td.tree_edges.emplace_back(i, parent[static_cast<size_t>(i)]);
        else if (i != n)
            td.tree_edges.emplace_back(i, n);
    }
    return td;
}

// PACE-style .td format: "s td <num_bags> <max_bag_size> <n>", bag lines
// "b <id> <v...>", then one "<id1> <id2>" line per tree edge.
inline TreeDecomposition parse_td(std::istream& in) {
    TreeDecomposition td;
    bool have_header = false;
    std::vector<char> bag_seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank(line)) continue;
        auto tok = detail::tokens(line);
        if (tok[0] == "c") continue;
        if (tok[0] == "s") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (tok.size() != 5 || tok[1] != "td")
                throw ParseError(lineno, "malformed header, want 's td <bags> <size> <n>'");
            long long num = detail::to_int(tok[2], lineno);
            long long n = detail::to_int(tok[4], lineno);
            if (num < 0 || n < 0) throw ParseError(lineno, "negative count in header");
            td.num_nodes = static_cast<int>(num);
            td.n = static_cast<int>(n);
            td.bags.assign(static_cast<size_t>(td.num_nodes) + 1, {});
            bag_seen.assign(static_cast<size_t>(td.num_nodes) + 1, 0);
            have_header = true;
        } else if (tok[0] == "b") {
            if (!have_header) throw ParseError(lineno, "bag before header");
            if (tok.size() < 2) throw ParseError(lineno, "malformed bag line");
            long long id = detail::to_int(tok[1], lineno);
            if (id < 1 || id > td.num_nodes) throw ParseError(lineno, "bag id out of range");
            if (bag_seen[static_cast<size_t>(id)]) throw ParseError(lineno, "duplicate bag id");
            bag_seen[static_cast<size_t>(id)] = 1;
            std::vector<Vertex> bag;
            for (size_t t = 2; t < tok.size(); ++t) {
                long long v = detail::to_int(tok[t], lineno);
                if (v < 1 || v > td.n) throw ParseError(lineno, "bag vertex out of range");
                bag.push_back(static_cast<Vertex>(v));
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            td.bags[static_cast<size_t>(id)] = std::move(bag);
        } else {
            if (!have_header) throw ParseError(lineno, "edge before header");
            if (tok.size() != 2) throw ParseError(lineno, "unrecognized line '" + line + "'");
            long long a = detail::to_int(tok[0], lineno);
            long long b = detail::to_int(tok[1], lineno);
            if (a < 1 || a > td.num_nodes || b < 1 || b > td.num_nodes)
                throw ParseError(lineno, "tree edge node id out of range");
            td.tree_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    if (!have_header) throw ParseError("missing 's td' header");
    for (int i = 1; i <= td.num_nodes; ++i)
        if (!bag_seen[static_cast<size_t>(i)])
            throw ParseError("bag " + std::to_string(i) + " missing");
    return td;
}

inline TreeDecomposition parse_td(const std::string& text) {
    std::istringstream in(text);
    return parse_td(in);
}

inline void serialize_td(const TreeDecomposition& td, std::ostream& out) {
    out << "s td " << td.num_nodes << ' ' << td.width() + 1 << ' ' << td.n << '\n';
    for (int i = 1; i <= td.num_nodes; ++i) {
        out << "b " << i;
        for (Vertex v : td.bags[static_cast<size_t>(i)]) out << ' ' << v;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a << ' ' << b << '\n';
}

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    Vertex vertex = 0;  // the introduced / forgotten vertex
    std::vector<int> children;
    std::vector<Vertex> bag;  // sorted
};

struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;  // 0-indexed
    int root = -1;
    int n = 0;

    int width() const {
        size_t largest = 0;
        for (const auto& nd : nodes) largest = std::max(largest, nd.bag.size());
        return static_cast<int>(largest) - 1;
    }

    TreeDecomposition as_tree_decomposition() const {
        TreeDecomposition td;
        td.n = n;
        td.num_nodes = static_cast<int>(nodes.size());
        td.bags.assign(nodes.size() + 1, {});
        for (size_t i = 0; i < nodes.size(); ++i) td.bags[i + 1] = nodes[i].bag;
        for (size_t i = 0; i < nodes.size(); ++i)
            for (int c : nodes[i].children)
                td.tree_edges.emplace_back(static_cast<int>(i) + 1, c + 1);
        return td;
    }
};

// Structural invariants of the nice form; nullopt when everything holds.
inline std::optional<std::string> check_nice_structure(const NiceTreeDecomposition& ntd) {
    if (ntd.root < 0 || ntd.root >= static_cast<int>(ntd.nodes.size()))
        return "missing root";
    if (!ntd.nodes[static_cast<size_t>(ntd.root)].bag.empty()) return "root bag not empty";
    for (size_t i = 0; i < ntd.nodes.size(); ++i) {
        const auto& nd = ntd.nodes[i];
        auto diff_one = [&](const std::vector<Vertex>& big, const std::vector<Vertex>& small) {
            std::vector<Vertex> d;
            std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                                std::back_inserter(d));
            return d.size() == 1 && d[0] == nd.vertex &&
                   big.size() == small.size() + 1;
        };
        switch (nd.kind) {
            case NodeKind::Leaf:
                if (!nd.children.empty() || !nd.bag.empty())
                    return "leaf node " + std::to_string(i) + " malformed";
                break;
            case NodeKind::Introduce: {
                if (nd.children.size() != 1) return "introduce node without single child";
                const auto& child = ntd.nodes[static_cast<size_t>(nd.children[0])];
                if (!diff_one(nd.bag, child.bag))
                    return "introduce node " + std::to_string(i) + " bag mismatch";
                break;
            }
            case NodeKind::Forget: {
                if (nd.children.size() != 1) return "forget node without single child";
                const auto& child = ntd.nodes[static_cast<size_t>(nd.children[0])];
                if (!diff_one(child.bag, nd.bag))
                    return "forget node " + std::to_string(i) + " bag mismatch";
                break;
            }
            case NodeKind::Join: {
                if (nd.children.size() != 2) return "join node without two children";
                const auto& a = ntd.nodes[static_cast<size_t>(nd.children[0])];
                const auto& b = ntd.nodes[static_cast<size_t>(nd.children[1])];
                if (a.bag != nd.bag || b.bag != nd.bag)
                    return "join node " + std::to_string(i) + " bag mismatch";
                break;
            }
        }
    }
    return std::nullopt;
}

// Roots the decomposition at node 1 and rewrites it with only the four nice
// node kinds. Width is preserved.
inline NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
    if (td.num_nodes < 1) throw std::invalid_argument("decomposition has no nodes");
    NiceTreeDecomposition out;
    out.n = td.n;

    auto add = [&out](NodeKind kind, Vertex v, std::vector<Vertex> bag,
                      std::vector<int> children) {
        out.nodes.push_back({kind, v, std::move(children), std::move(bag)});
        return static_cast<int>(out.nodes.size()) - 1;
    };

    // Chain of forgets then introduces carrying a subtree's top bag to `target`.
    auto bridge = [&](int top, const std::vector<Vertex>& target) {
        int cur = top;
        std::vector<Vertex> bag = out.nodes[static_cast<size_t>(cur)].bag;
        std::vector<Vertex> drop, gain;
        std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(),
                            std::back_inserter(drop));
        std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(),
                            std::back_inserter(gain));
        for (Vertex v : drop) {
            bag.erase(std::find(bag.begin(), bag.end(), v));
            cur = add(NodeKind::Forget, v, bag, {cur});
        }
        for (Vertex v : gain) {
            bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
            cur = add(NodeKind::Introduce, v, bag, {cur});
        }
        return cur;
    };

    auto leaf_chain = [&](const std::vector<Vertex>& target) {
        int cur = add(NodeKind::Leaf, 0, {}, {});
        std::vector<Vertex> bag;
        for (Vertex v : target) {
            bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
            cur = add(NodeKind::Introduce, v, bag, {cur});
        }
        return cur;
    };

    auto adj = td.node_adjacency();
    // Post-order over the original tree rooted at node 1, without recursion.
    struct Frame {
        int node, parent;
        size_t next_child = 0;
        std::vector<int> tops;  // nice tops of processed children, already bridged
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{1, 0, 0, {}});
    int built = -1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nbrs = adj[static_cast<size_t>(f.node)];
        if (built >= 0) {
            f.tops.push_back(bridge(built, td.bags[static_cast<size_t>(f.node)]));
            built = -1;
        }
        bool descended = false;
        while (f.next_child < nbrs.size()) {
            int c = nbrs[f.next_child++];
            if (c == f.parent) continue;
            stack.push_back(Frame{c, f.node, 0, {}});
            descended = true;
            break;
        }
        if (descended) continue;
        int top;
        if (f.tops.empty()) {
            top = leaf_chain(td.bags[static_cast<size_t>(f.node)]);
        } else {
            top = f.tops[0];
            for (size_t i = 1; i < f.tops.size(); ++i)
                top = add(NodeKind::Join, 0, td.bags[static_cast<size_t>(f.node)],
                          {top, f.tops[i]});
        }
        built = top;
        stack.pop_back();
    }

    // Forget the root bag down to the empty root.
    std::vector<Vertex> bag = out.nodes[static_cast<size_t>(built)].bag;
    int cur = built;
    while (!bag.empty()) {
        Vertex v = bag.front();
        bag.erase(bag.begin());
        cur = add(NodeKind::Forget, v, bag, {cur});
    }
    out.root = cur;
    return out;
}

inline NiceTreeDecomposition make_nice(const Graph& g) {
    auto td = build_tree_decomposition(g);
    return make_nice(td);
}

}  // namespace mmds
