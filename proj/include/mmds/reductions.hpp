#pragma once

// Hardness constructions as deterministic instance generators. Each output
// carries the generated instance, one structured role label per vertex, and
// enough structure to build the forward-direction witness solutions. The
// source problems come with exhaustive reference deciders used by the
// reduction-equivalence sweeps.

#include <map>
#include <optional>

#include "checker.hpp"
#include "graph.hpp"

namespace mmds {

struct ReductionOutput {
    Instance instance;
    std::vector<std::string> vertex_labels;  // index v-1
    std::string source_ref;
};

namespace detail {

struct GraphBuilder {
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;

    Vertex fresh(std::string label) {
        labels.push_back(std::move(label));
        return static_cast<Vertex>(labels.size());
    }

    void edge(Vertex u, Vertex v) { edges.emplace_back(u, v); }

    Graph build() const { return Graph::from_edges(static_cast<int>(labels.size()), edges); }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Positive 1-in-3 SAT -> MMDS with k = 1 (perfect code) on the incidence
// graph, one pendant per variable. Bipartite; planar whenever the incidence
// graph is.

struct Pp1in3Output {
    ReductionOutput out;
    int num_vars = 0;
    int num_clauses = 0;

    Vertex var_vertex(int i) const { return i; }
    Vertex hat_vertex(int i) const { return num_vars + i; }
    Vertex clause_vertex(int j) const { return 2 * num_vars + j; }
};

inline Pp1in3Output reduce_pp1in3sat(const CnfFormula& phi) {
    if (!phi.positive_only) throw std::invalid_argument("formula has a negative literal");
    for (const auto& clause : phi.clauses) {
        if (clause.size() != 3) throw std::invalid_argument("clause arity must be 3");
        std::vector<int> vars(clause);
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
            throw std::invalid_argument("repeated variable in clause");
    }
    const int n = phi.num_vars, m = static_cast<int>(phi.clauses.size());
    detail::GraphBuilder b;
    for (int i = 1; i <= n; ++i) b.fresh("x_" + std::to_string(i));
    for (int i = 1; i <= n; ++i) b.fresh("xhat_" + std::to_string(i));
    for (int j = 1; j <= m; ++j) b.fresh("clause_" + std::to_string(j));

    Pp1in3Output red;
    red.num_vars = n;
    red.num_clauses = m;
    for (int i = 1; i <= n; ++i) b.edge(red.var_vertex(i), red.hat_vertex(i));
    for (int j = 1; j <= m; ++j)
        for (int lit : phi.clauses[static_cast<size_t>(j - 1)])
            b.edge(red.var_vertex(lit), red.clause_vertex(j));

    red.out = ReductionOutput{Instance(b.build(), 1), std::move(b.labels),
                              "pp1in3sat n=" + std::to_string(n) + " m=" + std::to_string(m)};
    return red;
}

// Solution from an exactly-one-true assignment: true variables plus the
// pendants of the false ones.
inline Solution pp1in3_witness(const Pp1in3Output& red, const std::vector<bool>& assignment) {
    if (assignment.size() != static_cast<size_t>(red.num_vars) + 1)
        throw std::invalid_argument("assignment size mismatch (1-indexed)");
    std::vector<Vertex> members;
    for (int i = 1; i <= red.num_vars; ++i)
        members.push_back(assignment[static_cast<size_t>(i)] ? red.var_vertex(i)
                                                             : red.hat_vertex(i));
    return Solution(std::move(members));
}

// ---------------------------------------------------------------------------
// Multi-Colored Independent Set -> MMDS on a split graph, same k. The input
// vertices plus w form the clique part; the U_i pads and one vertex per
// cross-class edge form the independent part. Edges inside a color class
// never affect a one-per-class tuple and are ignored.

struct MisSplitOutput {
    ReductionOutput out;
    ColoredGraph source;
    int k = 0;
    Vertex w = 0;
    std::vector<Vertex> clique_part;                     // V' = V ∪ {w}
    std::vector<std::vector<Vertex>> u_sets;             // per class, k+1 vertices
    std::vector<std::pair<Vertex, Vertex>> edge_source;  // source edge of each x vertex
    std::vector<Vertex> x_vertices;
};

inline MisSplitOutput reduce_mis_split(const ColoredGraph& g, int k) {
    if (k != g.num_colors)
        throw std::invalid_argument("k must equal the number of color classes");
    const int nv = g.graph.n();
    detail::GraphBuilder b;
    MisSplitOutput red;
    red.source = g;
    red.k = k;

    for (Vertex v = 1; v <= nv; ++v) {
        b.fresh("V_" + std::to_string(g.color[static_cast<size_t>(v)]) + "/" + std::to_string(v));
        red.clique_part.push_back(v);
    }
    red.w = b.fresh("w");
    red.clique_part.push_back(red.w);
    for (Vertex u = 1; u <= static_cast<Vertex>(red.clique_part.size()); ++u)
        for (Vertex v = u + 1; v <= static_cast<Vertex>(red.clique_part.size()); ++v)
            b.edge(u, v);

    red.u_sets.assign(static_cast<size_t>(k), {});
    for (int c = 1; c <= k; ++c)
        for (int t = 1; t <= k + 1; ++t) {
            Vertex uv = b.fresh("U_" + std::to_string(c) + "/" + std::to_string(t));
            red.u_sets[static_cast<size_t>(c - 1)].push_back(uv);
            for (Vertex v : g.class_members(c)) b.edge(v, uv);
        }

    for (int p = 1; p <= k; ++p)
        for (int q = p + 1; q <= k; ++q)
            for (auto [u, v] : g.graph.edges()) {
                int cu = g.color[static_cast<size_t>(u)], cv = g.color[static_cast<size_t>(v)];
                if (std::min(cu, cv) != p || std::max(cu, cv) != q) continue;
                Vertex a = cu == p ? u : v;  // endpoint in V_p
                Vertex c = cu == p ? v : u;  // endpoint in V_q
                Vertex x = b.fresh("D_" + std::to_string(p) + "," + std::to_string(q) + "/x(" +
                                   std::to_string(a) + "," + std::to_string(c) + ")");
                red.x_vertices.push_back(x);
                red.edge_source.emplace_back(a, c);
                b.edge(red.w, x);
                for (Vertex y : g.class_members(p))
                    if (y != a) b.edge(x, y);
                for (Vertex y : g.class_members(q))
                    if (y != c) b.edge(x, y);
            }

    red.out = ReductionOutput{Instance(b.build(), k), std::move(b.labels),
                              "mis-split |V|=" + std::to_string(nv) + " k=" + std::to_string(k)};
    return red;
}

// The chosen class representatives keep their ids in the split graph.
inline Solution mis_witness(const MisSplitOutput& red, const std::vector<Vertex>& one_per_class) {
    const ColoredGraph& g = red.source;
    if (one_per_class.size() != static_cast<size_t>(red.k))
        throw std::invalid_argument("need one vertex per color class");
    for (int c = 1; c <= red.k; ++c) {
        Vertex v = one_per_class[static_cast<size_t>(c - 1)];
        g.graph.check_vertex(v);
        if (g.color[static_cast<size_t>(v)] != c)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not in class " +
                                        std::to_string(c));
    }
    for (size_t i = 0; i < one_per_class.size(); ++i)
        for (size_t j = i + 1; j < one_per_class.size(); ++j)
            if (g.graph.has_edge(one_per_class[i], one_per_class[j]))
                throw std::invalid_argument("input is not an independent set");
    return Solution(std::vector<Vertex>(one_per_class));
}

// ---------------------------------------------------------------------------
// 3-SAT -> MMDS whose minimum vertex cover is (n+1)(k+1); needs k >= 2.
// Variable gadget: the two literal vertices share k+1 degree-two vertices and
// k-1 pendant-guarded hubs. Clause side: clause vertices hang off Y, which is
// guarded by k pendant-guarded hubs.

struct Sat3Output {
    ReductionOutput out;
    int k = 0;
    int num_vars = 0;
    int num_clauses = 0;
    std::vector<Vertex> vertex_cover_certificate;  // literals, b hubs, Y, u hubs

    int per_var() const { return 2 + (k + 1) + (k - 1) + (k - 1) * (k + 1); }
    Vertex pos_literal(int i) const { return (i - 1) * per_var() + 1; }
    Vertex neg_literal(int i) const { return (i - 1) * per_var() + 2; }
    Vertex a_vertex(int i, int j) const { return (i - 1) * per_var() + 2 + j; }
    Vertex b_vertex(int i, int j) const { return (i - 1) * per_var() + 2 + (k + 1) + j; }
    Vertex d_vertex(int i, int j, int t) const {
        return (i - 1) * per_var() + 2 + (k + 1) + (k - 1) + (j - 1) * (k + 1) + t;
    }
    Vertex clause_vertex(int l) const { return num_vars * per_var() + l; }
    Vertex y_vertex() const { return num_vars * per_var() + num_clauses + 1; }
    Vertex u_vertex(int q) const { return y_vertex() + q; }
    Vertex r_vertex(int q, int p) const { return y_vertex() + k + (q - 1) * (k + 1) + p; }
};

inline Sat3Output reduce_sat3(const CnfFormula& phi, int k) {
    if (k < 2) throw std::invalid_argument("construction needs k >= 2");
    for (const auto& clause : phi.clauses)
        if (clause.size() > 3) throw std::invalid_argument("clause arity must be at most 3");

    Sat3Output red;
    red.k = k;
    red.num_vars = phi.num_vars;
    red.num_clauses = static_cast<int>(phi.clauses.size());
    const int n = red.num_vars, m = red.num_clauses;

    detail::GraphBuilder b;
    for (int i = 1; i <= n; ++i) {
        std::string vi = std::to_string(i);
        b.fresh("v_x" + vi);
        b.fresh("v_notx" + vi);
        for (int j = 1; j <= k + 1; ++j) b.fresh("a_" + vi + "^" + std::to_string(j));
        for (int j = 1; j <= k - 1; ++j) b.fresh("b_" + vi + "^" + std::to_string(j));
        for (int j = 1; j <= k - 1; ++j)
            for (int t = 1; t <= k + 1; ++t)
                b.fresh("d_" + vi + "," + std::to_string(j) + "^" + std::to_string(t));
    }
    for (int l = 1; l <= m; ++l) b.fresh("v_C" + std::to_string(l));
    b.fresh("Y");
    for (int q = 1; q <= k; ++q) b.fresh("u_" + std::to_string(q));
    for (int q = 1; q <= k; ++q)
        for (int p = 1; p <= k + 1; ++p)
            b.fresh("r_" + std::to_string(q) + "^" + std::to_string(p));

    for (int i = 1; i <= n; ++i) {
        b.edge(red.pos_literal(i), red.neg_literal(i));
        for (int j = 1; j <= k + 1; ++j) {
            b.edge(red.pos_literal(i), red.a_vertex(i, j));
            b.edge(red.neg_literal(i), red.a_vertex(i, j));
        }
        for (int j = 1; j <= k - 1; ++j) {
            b.edge(red.pos_literal(i), red.b_vertex(i, j));
            b.edge(red.neg_literal(i), red.b_vertex(i, j));
            for (int t = 1; t <= k + 1; ++t) b.edge(red.b_vertex(i, j), red.d_vertex(i, j, t));
        }
    }
    for (int l = 1; l <= m; ++l) b.edge(red.clause_vertex(l), red.y_vertex());
    for (int q = 1; q <= k; ++q) {
        b.edge(red.y_vertex(), red.u_vertex(q));
        for (int p = 1; p <= k + 1; ++p) b.edge(red.u_vertex(q), red.r_vertex(q, p));
    }
    for (int l = 1; l <= m; ++l) {
        std::vector<Vertex> lits;
        for (int lit : phi.clauses[static_cast<size_t>(l - 1)])
            lits.push_back(lit > 0 ? red.pos_literal(lit) : red.neg_literal(-lit));
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (Vertex lv : lits) b.edge(red.clause_vertex(l), lv);
    }

    for (int i = 1; i <= n; ++i) {
        red.vertex_cover_certificate.push_back(red.pos_literal(i));
        red.vertex_cover_certificate.push_back(red.neg_literal(i));
        for (int j = 1; j <= k - 1; ++j)
            red.vertex_cover_certificate.push_back(red.b_vertex(i, j));
    }
    red.vertex_cover_certificate.push_back(red.y_vertex());
    for (int q = 1; q <= k; ++q) red.vertex_cover_certificate.push_back(red.u_vertex(q));
    std::sort(red.vertex_cover_certificate.begin(), red.vertex_cover_certificate.end());

    red.out = ReductionOutput{Instance(b.build(), k), std::move(b.labels),
                              "sat3 n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                  " k=" + std::to_string(k)};
    return red;
}

// Solution from a satisfying assignment: the true literal per variable,
// every b hub, and every u hub.
inline Solution sat3_witness(const Sat3Output& red, const std::vector<bool>& assignment) {
    if (assignment.size() != static_cast<size_t>(red.num_vars) + 1)
        throw std::invalid_argument("assignment size mismatch (1-indexed)");
    std::vector<Vertex> members;
    for (int i = 1; i <= red.num_vars; ++i) {
        members.push_back(assignment[static_cast<size_t>(i)] ? red.pos_literal(i)
                                                             : red.neg_literal(i));
        for (int j = 1; j <= red.k - 1; ++j) members.push_back(red.b_vertex(i, j));
    }
    for (int q = 1; q <= red.k; ++q) members.push_back(red.u_vertex(q));
    return Solution(std::move(members));
}

// ---------------------------------------------------------------------------
// Exhaustive deciders for the source problems.

namespace detail {

inline void check_assignment_budget(int num_vars) {
    if (num_vars > 20) throw BudgetError("source oracle refused: more than 2^20 assignments");
}

}  // namespace detail

// Exactly one true literal slot per clause.
inline std::optional<std::vector<bool>> find_one_in_three_assignment(const CnfFormula& phi) {
    if (!phi.positive_only) throw std::invalid_argument("formula has a negative literal");
    detail::check_assignment_budget(phi.num_vars);
    const int n = phi.num_vars;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool ok = true;
        for (const auto& clause : phi.clauses) {
            int trues = 0;
            for (int lit : clause)
                if (mask >> (lit - 1) & 1) ++trues;
            if (trues != 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> a(static_cast<size_t>(n) + 1, false);
            for (int i = 1; i <= n; ++i) a[static_cast<size_t>(i)] = mask >> (i - 1) & 1;
            return a;
        }
    }
    return std::nullopt;
}

inline std::optional<std::vector<bool>> find_sat_assignment(const CnfFormula& phi) {
    detail::check_assignment_budget(phi.num_vars);
    const int n = phi.num_vars;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool ok = true;
        for (const auto& clause : phi.clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool val = mask >> (std::abs(lit) - 1) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> a(static_cast<size_t>(n) + 1, false);
            for (int i = 1; i <= n; ++i) a[static_cast<size_t>(i)] = mask >> (i - 1) & 1;
            return a;
        }
    }
    return std::nullopt;
}

namespace detail {

// Enumerates one-vertex-per-class tuples; `want_adjacent` selects clique
// (all cross pairs adjacent) versus independent set (none adjacent).
inline std::optional<std::vector<Vertex>> colorful_tuple_search(const ColoredGraph& g,
                                                                bool want_adjacent) {
    const int k = g.num_colors;
    std::vector<std::vector<Vertex>> classes;
    long long combos = 1;
    for (int c = 1; c <= k; ++c) {
        classes.push_back(g.class_members(c));
        combos *= static_cast<long long>(classes.back().size());
        if (combos > (1ll << 20))
            throw BudgetError("source oracle refused: more than 2^20 tuples");
    }
    std::vector<size_t> idx(static_cast<size_t>(k), 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j) {
                bool adj = g.graph.has_edge(classes[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]],
                                            classes[static_cast<size_t>(j)][idx[static_cast<size_t>(j)]]);
                if (adj != want_adjacent) ok = false;
            }
        if (ok) {
            std::vector<Vertex> tuple;
            for (int i = 0; i < k; ++i)
                tuple.push_back(classes[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]]);
            return tuple;
        }
        int pos = k - 1;
        while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == classes[static_cast<size_t>(pos)].size()) {
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
    }
}

}  // namespace detail

inline std::optional<std::vector<Vertex>> find_multicolored_clique(const ColoredGraph& g) {
    return detail::colorful_tuple_search(g, true);
}

inline std::optional<std::vector<Vertex>> find_multicolored_independent_set(
    const ColoredGraph& g) {
    return detail::colorful_tuple_search(g, false);
}

}  // namespace mmds
