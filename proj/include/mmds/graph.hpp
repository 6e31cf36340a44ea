#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmds {

using Vertex = int;

// Thrown when an input stream violates one of the text formats.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

// Thrown when an exact solver refuses an instance instead of running
// past its configured search budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Simple undirected graph on vertices 1..n with sorted adjacency lists.
// No self-loops, no parallel edges; adjacency is kept symmetric.
class Graph {
public:
    Graph() : Graph(0) {}
    explicit Graph(int n) : n_(n), m_(0), adj_(static_cast<size_t>(n) + 1) {
        if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    }

    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        g.finish();
        return g;
    }

    // Inserts an edge; duplicates and self-loops are rejected. Call finish()
    // once after the last insertion.
    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
        ++m_;
        sorted_ = false;
    }

    void finish() {
        for (Vertex v = 1; v <= n_; ++v) {
            auto& a = adj_[static_cast<size_t>(v)];
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
        }
        sorted_ = true;
    }

    int n() const { return n_; }
    int m() const { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const {
        int d = 0;
        for (Vertex v = 1; v <= n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& a = neighbors(u);
        return std::binary_search(a.begin(), a.end(), v);
    }

    // All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(static_cast<size_t>(m_));
        for (Vertex u = 1; u <= n_; ++u)
            for (Vertex v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void check_vertex(Vertex v) const {
        if (v < 1 || v > n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(n_));
    }

    bool is_sorted() const { return sorted_; }

private:
    int n_;
    int m_;
    std::vector<std::vector<Vertex>> adj_;
    bool sorted_ = true;
};

// N(v) together with v itself, sorted ascending.
inline std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
    const auto& open = g.neighbors(v);
    std::vector<Vertex> out;
    out.reserve(open.size() + 1);
    auto it = std::lower_bound(open.begin(), open.end(), v);
    out.insert(out.end(), open.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, open.end());
    return out;
}

// A vertex set proposed as a k-membership dominating set.
struct Solution {
    std::vector<Vertex> members;  // sorted, unique

    Solution() = default;
    explicit Solution(std::vector<Vertex> vs) : members(std::move(vs)) {
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end())
            throw std::invalid_argument("duplicate vertex in solution");
    }

    bool contains(Vertex v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }

    size_t size() const { return members.size(); }

    void check_range(const Graph& g) const {
        for (Vertex v : members) g.check_vertex(v);
    }

    bool operator==(const Solution& o) const { return members == o.members; }
};

// An MMDS instance: the graph plus the membership bound k.
struct Instance {
    Graph graph;
    int k = 1;

    Instance() = default;
    Instance(Graph g, int k_) : graph(std::move(g)), k(k_) {
        if (k < 1) throw std::invalid_argument("membership bound k must be >= 1");
    }
};

// Graph with a partition of the vertices into color classes 1..num_colors.
struct ColoredGraph {
    Graph graph;
    std::vector<int> color;  // 1-indexed by vertex; color[0] unused
    int num_colors = 0;

    ColoredGraph() = default;
    ColoredGraph(Graph g, std::vector<int> col) : graph(std::move(g)), color(std::move(col)) {
        if (color.size() != static_cast<size_t>(graph.n()) + 1)
            throw std::invalid_argument("color map size mismatch");
        for (Vertex v = 1; v <= graph.n(); ++v) {
            if (color[static_cast<size_t>(v)] < 1)
                throw std::invalid_argument("vertex " + std::to_string(v) + " is uncolored");
            num_colors = std::max(num_colors, color[static_cast<size_t>(v)]);
        }
        for (int c = 1; c <= num_colors; ++c)
            if (class_members(c).empty())
                throw std::invalid_argument("color class " + std::to_string(c) + " is empty");
    }

    std::vector<Vertex> class_members(int c) const {
        std::vector<Vertex> out;
        for (Vertex v = 1; v <= graph.n(); ++v)
            if (color[static_cast<size_t>(v)] == c) out.push_back(v);
        return out;
    }
};

// CNF formula as signed DIMACS literals. positive_only is set when no
// negative literal occurs anywhere.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    bool positive_only = true;

    CnfFormula() = default;
    CnfFormula(int nv, std::vector<std::vector<int>> cl)
        : num_vars(nv), clauses(std::move(cl)) {
        for (const auto& c : clauses)
            for (int lit : c) {
                if (lit == 0 || std::abs(lit) > num_vars)
                    throw std::invalid_argument("literal out of range: " + std::to_string(lit));
                if (lit < 0) positive_only = false;
            }
    }
};

// Closed integer intervals with caller-chosen ids.
struct IntervalSet {
    struct Interval {
        int id;
        long long left, right;
    };
    std::vector<Interval> items;

    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> iv) : items(std::move(iv)) {
        std::vector<int> ids;
        for (const auto& it : items) {
            if (it.left > it.right)
                throw std::invalid_argument("interval " + std::to_string(it.id) +
                                            " has left > right");
            ids.push_back(it.id);
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw std::invalid_argument("duplicate interval id");
    }
};

// Fixed-capacity bitset over vertices 1..n, used by the exact solvers.
class VertexBitset {
public:
    VertexBitset() = default;
    explicit VertexBitset(int n) : n_(n), w_(words(n), 0) {}

    void set(Vertex v) { w_[idx(v)] |= bit(v); }
    void reset(Vertex v) { w_[idx(v)] &= ~bit(v); }
    bool test(Vertex v) const { return (w_[idx(v)] & bit(v)) != 0; }

    int count_and(const VertexBitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i)
            c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    int size() const { return n_; }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        for (Vertex v = 1; v <= n_; ++v)
            if (test(v)) out.push_back(v);
        return out;
    }

private:
    static size_t words(int n) { return static_cast<size_t>(n) / 64 + 1; }
    static size_t idx(Vertex v) { return static_cast<size_t>(v) >> 6; }
    static uint64_t bit(Vertex v) { return 1ull << (static_cast<unsigned>(v) & 63u); }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace mmds
