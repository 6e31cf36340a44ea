#pragma once

// Seeded generators for the verification sweeps and property tests.

#include <random>

#include "graph.hpp"

namespace mmds {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool rand_coin(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline Graph random_er_graph(Rng& rng, int n, double p) {
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rand_coin(rng, p)) g.add_edge(u, v);
    g.finish();
    return g;
}

inline Graph random_tree(Rng& rng, int n) {
    Graph g(n);
    for (Vertex v = 2; v <= n; ++v) g.add_edge(v, rand_int(rng, 1, v - 1));
    g.finish();
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
    if (n >= 3) g.add_edge(n, 1);
    g.finish();
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
    g.finish();
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
    g.finish();
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
    g.finish();
    return g;
}

// Base graph plus `extra` pendant vertices attached to random base vertices;
// exercises the forcing rules.
inline Graph with_random_pendants(Rng& rng, const Graph& base, int extra) {
    Graph g(base.n() + extra);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int t = 1; t <= extra; ++t)
        g.add_edge(base.n() + t, rand_int(rng, 1, base.n()));
    g.finish();
    return g;
}

// Positive 3-CNF with three distinct variables per clause.
inline CnfFormula random_positive_3cnf(Rng& rng, int num_vars, int num_clauses) {
    if (num_vars < 3) throw std::invalid_argument("need at least 3 variables");
    std::vector<std::vector<int>> clauses;
    for (int c = 0; c < num_clauses; ++c) {
        std::vector<int> vars;
        while (vars.size() < 3) {
            int v = rand_int(rng, 1, num_vars);
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
        clauses.push_back(vars);
    }
    return CnfFormula(num_vars, std::move(clauses));
}

// Signed CNF with 1..3 distinct variables per clause.
inline CnfFormula random_cnf(Rng& rng, int num_vars, int num_clauses) {
    std::vector<std::vector<int>> clauses;
    for (int c = 0; c < num_clauses; ++c) {
        int arity = rand_int(rng, 1, std::min(3, num_vars));
        std::vector<int> vars;
        while (static_cast<int>(vars.size()) < arity) {
            int v = rand_int(rng, 1, num_vars);
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
        std::vector<int> clause;
        for (int v : vars) clause.push_back(rand_coin(rng, 0.5) ? v : -v);
        clauses.push_back(clause);
    }
    return CnfFormula(num_vars, std::move(clauses));
}

// Colored graph with the given class sizes and random cross-class edges.
inline ColoredGraph random_colored_graph(Rng& rng, const std::vector<int>& class_sizes,
                                         double cross_p) {
    int n = 0;
    for (int s : class_sizes) n += s;
    std::vector<int> color(static_cast<size_t>(n) + 1, 0);
    int next = 1;
    for (size_t c = 0; c < class_sizes.size(); ++c)
        for (int t = 0; t < class_sizes[c]; ++t) color[static_cast<size_t>(next++)] = static_cast<int>(c) + 1;
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (color[static_cast<size_t>(u)] != color[static_cast<size_t>(v)] &&
                rand_coin(rng, cross_p))
                g.add_edge(u, v);
    g.finish();
    return ColoredGraph(std::move(g), std::move(color));
}

// Equal classes of size n with a planted one-per-class clique plus random
// cross edges. Returns the colored graph and the planted clique.
struct PlantedCliqueInstance {
    ColoredGraph graph;
    std::vector<Vertex> clique;  // one vertex per class, ascending class order
};

inline PlantedCliqueInstance random_planted_clique(Rng& rng, int k, int n, double extra_p) {
    const int total = k * n;
    std::vector<int> color(static_cast<size_t>(total) + 1, 0);
    for (Vertex v = 1; v <= total; ++v) color[static_cast<size_t>(v)] = (v - 1) / n + 1;
    std::vector<Vertex> clique;
    for (int c = 0; c < k; ++c) clique.push_back(c * n + rand_int(rng, 1, n));

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            edges.emplace_back(clique[i], clique[j]);
    for (Vertex u = 1; u <= total; ++u)
        for (Vertex v = u + 1; v <= total; ++v) {
            if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) continue;
            bool planted = false;
            for (size_t i = 0; i < clique.size() && !planted; ++i)
                for (size_t j = i + 1; j < clique.size() && !planted; ++j)
                    planted = (clique[i] == u && clique[j] == v);
            if (!planted && rand_coin(rng, extra_p)) edges.emplace_back(u, v);
        }
    return {ColoredGraph(Graph::from_edges(total, edges), std::move(color)), clique};
}

inline IntervalSet random_intervals(Rng& rng, int count, long long coord_max) {
    std::vector<IntervalSet::Interval> items;
    for (int i = 1; i <= count; ++i) {
        long long a = rand_int(rng, 0, static_cast<int>(coord_max));
        long long b = rand_int(rng, 0, static_cast<int>(coord_max));
        items.push_back({i, std::min(a, b), std::max(a, b)});
    }
    return IntervalSet(std::move(items));
}

}  // namespace mmds
