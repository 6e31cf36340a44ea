#pragma once

// Greedy sweep over closed intervals: seed at the leftmost interval, then
// repeatedly hop to the interval crossing the current right endpoint with
// the furthest reach, discarding everything the current pick dominates.
// The output dominates the interval graph with membership at most 3.

#include "checker.hpp"
#include "graph.hpp"

namespace mmds {

// Vertices are interval indices in input order (1..n); closed intervals
// sharing an endpoint intersect.
inline Graph interval_graph(const IntervalSet& iv) {
    const int n = static_cast<int>(iv.items.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = iv.items[static_cast<size_t>(i)];
            const auto& b = iv.items[static_cast<size_t>(j)];
            if (std::max(a.left, b.left) <= std::min(a.right, b.right))
                g.add_edge(i + 1, j + 1);
        }
    g.finish();
    return g;
}

// Returns the chosen intervals as vertices of interval_graph(iv).
inline Solution greedy_dominating(const IntervalSet& iv) {
    const int n = static_cast<int>(iv.items.size());
    if (n == 0) throw std::invalid_argument("empty interval set");
    const auto& items = iv.items;
    std::vector<char> alive(static_cast<size_t>(n), 1);
    auto overlaps = [&](int i, int j) {
        return std::max(items[static_cast<size_t>(i)].left, items[static_cast<size_t>(j)].left) <=
               std::min(items[static_cast<size_t>(i)].right, items[static_cast<size_t>(j)].right);
    };

    // Leftmost left endpoint; ties to the larger right endpoint, then lowest id.
    auto seed = [&]() {
        int best = -1;
        for (int i = 0; i < n; ++i) {
            if (!alive[static_cast<size_t>(i)]) continue;
            if (best < 0) {
                best = i;
                continue;
            }
            const auto& a = items[static_cast<size_t>(i)];
            const auto& b = items[static_cast<size_t>(best)];
            if (a.left != b.left) {
                if (a.left < b.left) best = i;
            } else if (a.right != b.right) {
                if (a.right > b.right) best = i;
            } else if (a.id < b.id) {
                best = i;
            }
        }
        return best;
    };

    std::vector<Vertex> chosen;
    int remaining = n;
    int cur = seed();
    while (cur >= 0) {
        chosen.push_back(cur + 1);
        // Next pick: crosses right(cur) with the rightmost right endpoint,
        // ties to lowest id.
        int next = -1;
        const long long reach = items[static_cast<size_t>(cur)].right;
        for (int j = 0; j < n; ++j) {
            if (!alive[static_cast<size_t>(j)] || j == cur) continue;
            const auto& cand = items[static_cast<size_t>(j)];
            if (cand.left > reach || cand.right < reach) continue;
            if (next < 0 || cand.right > items[static_cast<size_t>(next)].right ||
                (cand.right == items[static_cast<size_t>(next)].right &&
                 cand.id < items[static_cast<size_t>(next)].id))
                next = j;
        }
        // Everything overlapping the pick is dominated; the next pick survives.
        for (int j = 0; j < n; ++j) {
            if (!alive[static_cast<size_t>(j)] || j == next) continue;
            if (overlaps(cur, j)) {
                alive[static_cast<size_t>(j)] = 0;
                --remaining;
            }
        }
        if (next >= 0) {
            cur = next;
        } else if (remaining > 0) {
            cur = seed();  // gap on the line: restart on the leftover intervals
        } else {
            cur = -1;
        }
    }
    return Solution(std::move(chosen));
}

// Original interval ids of a solution over interval_graph(iv) vertices.
inline std::vector<int> chosen_interval_ids(const IntervalSet& iv, const Solution& s) {
    std::vector<int> ids;
    for (Vertex v : s.members) ids.push_back(iv.items[static_cast<size_t>(v - 1)].id);
    return ids;
}

inline int max_membership(const Graph& g, const Solution& s) {
    int best = 0;
    for (Vertex v = 1; v <= g.n(); ++v) best = std::max(best, membership(g, s, v));
    return best;
}

}  // namespace mmds
