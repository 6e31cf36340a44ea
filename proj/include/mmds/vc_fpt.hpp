#pragma once

// FPT algorithm parameterized by vertex cover size. A minimum cover C is
// computed by a bounded search tree; each subset C1 of C is tried as the
// cover part of the solution. C1 fixes I1 (the independent vertices with no
// C1 neighbor, which must self-dominate) and leaves a residual choice R
// inside Ie, the C1-dominated independent vertices that still have spare
// membership. Vertices of Ie with equal C-neighborhoods are interchangeable,
// so they collapse into counting classes and the residual problem becomes a
// small integer program with at most two bound constraints per cover vertex,
// solved by branch and bound.

#include <atomic>
#include <map>
#include <optional>
#include <thread>

#include "checker.hpp"
#include "graph.hpp"

namespace mmds {

namespace detail {

inline bool covers_all_edges(const Graph& g, const VertexBitset& cover) {
    for (Vertex u = 1; u <= g.n(); ++u) {
        if (cover.test(u)) continue;
        for (Vertex v : g.neighbors(u))
            if (v > u && !cover.test(v)) return false;
    }
    return true;
}

inline bool cover_search(const Graph& g, VertexBitset& in_cover, std::vector<Vertex>& chosen,
                         int budget) {
    // Lexicographically smallest uncovered edge.
    Vertex eu = 0, ev = 0;
    for (Vertex u = 1; u <= g.n() && eu == 0; ++u) {
        if (in_cover.test(u)) continue;
        for (Vertex v : g.neighbors(u))
            if (v > u && !in_cover.test(v)) {
                eu = u;
                ev = v;
                break;
            }
    }
    if (eu == 0) return true;
    if (budget == 0) return false;
    for (Vertex pick : {eu, ev}) {
        in_cover.set(pick);
        chosen.push_back(pick);
        if (cover_search(g, in_cover, chosen, budget - 1)) return true;
        chosen.pop_back();
        in_cover.reset(pick);
    }
    return false;
}

}  // namespace detail

// Minimum vertex cover via iterative deepening on a binary search tree that
// branches on the two endpoints of an uncovered edge. Deterministic.
inline std::vector<Vertex> min_vertex_cover(const Graph& g, int budget = 30) {
    for (int size = 0; size <= g.n(); ++size) {
        if (size > budget)
            throw BudgetError("vertex cover search refused: minimum cover exceeds " +
                              std::to_string(budget));
        VertexBitset in_cover(g.n());
        std::vector<Vertex> chosen;
        if (detail::cover_search(g, in_cover, chosen, size)) {
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        }
    }
    throw std::logic_error("unreachable: V itself is a cover");
}

struct CoverSplit {
    std::vector<Vertex> cover;        // C, sorted
    std::vector<Vertex> independent;  // I = V \ C
    std::vector<Vertex> c1;           // chosen subset of C
    std::vector<Vertex> i1;           // I \ (N(C1) ∩ I): must be in any solution
    std::vector<Vertex> ie;           // N(C1) ∩ I with fewer than k neighbors in C1
};

inline CoverSplit compute_cover_split(const Instance& inst, const std::vector<Vertex>& cover,
                                      const std::vector<Vertex>& c1) {
    const Graph& g = inst.graph;
    VertexBitset in_c(g.n()), in_c1(g.n());
    for (Vertex v : cover) {
        g.check_vertex(v);
        in_c.set(v);
    }
    if (!detail::covers_all_edges(g, in_c))
        throw std::invalid_argument("C is not a vertex cover");
    for (Vertex v : c1) {
        if (v < 1 || v > g.n() || !in_c.test(v))
            throw std::invalid_argument("C1 is not a subset of C");
        in_c1.set(v);
    }

    CoverSplit out;
    out.cover = cover;
    out.c1 = c1;
    std::sort(out.cover.begin(), out.cover.end());
    std::sort(out.c1.begin(), out.c1.end());
    for (Vertex v = 1; v <= g.n(); ++v) {
        if (in_c.test(v)) continue;
        out.independent.push_back(v);
        int nbrs_in_c1 = 0;
        for (Vertex u : g.neighbors(v))
            if (in_c1.test(u)) ++nbrs_in_c1;
        if (nbrs_in_c1 == 0)
            out.i1.push_back(v);
        else if (nbrs_in_c1 < inst.k)
            out.ie.push_back(v);
    }
    return out;
}

struct CmmdsClass {
    uint64_t signature;           // N(v) ∩ C as a bitmask over cover positions
    std::vector<Vertex> members;  // sorted ascending
};

struct CmmdsConstraint {
    Vertex cover_vertex;
    int lower, upper;
    std::vector<int> classes;  // class indices incident to cover_vertex
};

struct CmmdsProgram {
    CoverSplit split;
    std::vector<CmmdsClass> classes;
    std::vector<CmmdsConstraint> constraints;
};

// Builds the grouped program for (G, k, C, C1), or nullopt when C1 ∪ I1 is
// already infeasible: some closed neighborhood exceeds k, or a cover vertex
// that only R could dominate has no Ie neighbor at all.
inline std::optional<CmmdsProgram> build_cmmds(const Instance& inst,
                                               const std::vector<Vertex>& cover,
                                               const std::vector<Vertex>& c1) {
    const Graph& g = inst.graph;
    CmmdsProgram prog;
    prog.split = compute_cover_split(inst, cover, c1);
    const CoverSplit& sp = prog.split;

    VertexBitset seed(g.n());
    for (Vertex v : sp.c1) seed.set(v);
    for (Vertex v : sp.i1) seed.set(v);

    // lambda(v) = |N[v] ∩ (C1 ∪ I1)|
    std::vector<int> lambda(static_cast<size_t>(g.n()) + 1, 0);
    for (Vertex v = 1; v <= g.n(); ++v) {
        int c = seed.test(v) ? 1 : 0;
        for (Vertex u : g.neighbors(v))
            if (seed.test(u)) ++c;
        lambda[static_cast<size_t>(v)] = c;
        if (c > inst.k) return std::nullopt;
    }

    std::vector<int> cover_pos(static_cast<size_t>(g.n()) + 1, -1);
    for (size_t i = 0; i < sp.cover.size(); ++i)
        cover_pos[static_cast<size_t>(sp.cover[i])] = static_cast<int>(i);

    std::map<uint64_t, std::vector<Vertex>> by_signature;
    for (Vertex v : sp.ie) {
        uint64_t sig = 0;
        for (Vertex u : g.neighbors(v))
            if (cover_pos[static_cast<size_t>(u)] >= 0)
                sig |= 1ull << cover_pos[static_cast<size_t>(u)];
        by_signature[sig].push_back(v);
    }
    for (auto& [sig, members] : by_signature) prog.classes.push_back({sig, members});

    for (size_t i = 0; i < sp.cover.size(); ++i) {
        Vertex v = sp.cover[i];
        std::vector<int> incident;
        for (size_t cidx = 0; cidx < prog.classes.size(); ++cidx)
            if (prog.classes[cidx].signature >> i & 1) incident.push_back(static_cast<int>(cidx));
        // v is dominated by the seed iff it or a neighbor is in C1 ∪ I1.
        bool seeded = lambda[static_cast<size_t>(v)] > 0;
        if (!seeded) {
            if (incident.empty()) return std::nullopt;  // nothing can dominate v
            prog.constraints.push_back({v, 1, inst.k, std::move(incident)});
        } else {
            prog.constraints.push_back(
                {v, 0, inst.k - lambda[static_cast<size_t>(v)], std::move(incident)});
        }
    }
    return prog;
}

// Depth-first branch and bound over the class counters, values ascending,
// with residual-bound pruning. Returns the first satisfying vector.
inline std::optional<std::vector<int>> solve_cmmds(const CmmdsProgram& prog) {
    const size_t nclasses = prog.classes.size();
    const size_t ncons = prog.constraints.size();

    std::vector<std::vector<int>> cons_of_class(nclasses);
    for (size_t c = 0; c < ncons; ++c)
        for (int cls : prog.constraints[c].classes)
            cons_of_class[static_cast<size_t>(cls)].push_back(static_cast<int>(c));

    // rem[c][i]: total population of constraint c's classes with index >= i.
    std::vector<std::vector<long long>> rem(ncons, std::vector<long long>(nclasses + 1, 0));
    for (size_t c = 0; c < ncons; ++c) {
        std::vector<char> has(nclasses, 0);
        for (int cls : prog.constraints[c].classes) has[static_cast<size_t>(cls)] = 1;
        for (size_t i = nclasses; i-- > 0;)
            rem[c][i] = rem[c][i + 1] +
                        (has[i] ? static_cast<long long>(prog.classes[i].members.size()) : 0);
    }

    std::vector<long long> cur(ncons, 0);
    std::vector<int> assign(nclasses, 0);

    auto viable = [&](size_t depth) {
        for (size_t c = 0; c < ncons; ++c) {
            if (cur[c] > prog.constraints[c].upper) return false;
            if (cur[c] + rem[c][depth] < prog.constraints[c].lower) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, size_t depth) -> bool {
        if (!viable(depth)) return false;
        if (depth == nclasses) return true;
        const int pop = static_cast<int>(prog.classes[depth].members.size());
        for (int val = 0; val <= pop; ++val) {
            assign[depth] = val;
            if (val > 0)
                for (int c : cons_of_class[depth]) ++cur[static_cast<size_t>(c)];
            if (self(self, depth + 1)) return true;
        }
        for (int c : cons_of_class[depth]) cur[static_cast<size_t>(c)] -= pop;
        assign[depth] = 0;
        return false;
    };
    if (rec(rec, 0)) return assign;
    return std::nullopt;
}

struct VcFptOptions {
    int cover_budget = 20;  // refuse when the minimum cover is larger
    int jobs = 1;
};

// Realizes a class assignment as concrete vertices: the lowest `chosen` ids
// of each class.
inline std::vector<Vertex> realize_classes(const CmmdsProgram& prog,
                                           const std::vector<int>& chosen) {
    std::vector<Vertex> out;
    for (size_t i = 0; i < prog.classes.size(); ++i)
        for (int j = 0; j < chosen[i]; ++j)
            out.push_back(prog.classes[i].members[static_cast<size_t>(j)]);
    return out;
}

namespace detail {

inline std::optional<Solution> vc_fpt_try_mask(const Instance& inst,
                                               const std::vector<Vertex>& cover,
                                               uint64_t mask) {
    std::vector<Vertex> c1;
    for (size_t b = 0; b < cover.size(); ++b)
        if (mask >> b & 1) c1.push_back(cover[b]);
    auto prog = build_cmmds(inst, cover, c1);
    if (!prog) return std::nullopt;
    auto chosen = solve_cmmds(*prog);
    if (!chosen) return std::nullopt;
    std::vector<Vertex> members = c1;
    members.insert(members.end(), prog->split.i1.begin(), prog->split.i1.end());
    auto r = realize_classes(*prog, *chosen);
    members.insert(members.end(), r.begin(), r.end());
    return Solution(std::move(members));
}

}  // namespace detail

// Iterates subsets C1 of a minimum vertex cover as a binary counter (bit i
// is the i-th smallest cover vertex) and returns the solution of the first
// satisfiable constrained program; none means the instance is infeasible.
// Subsets are independent, so workers scan disjoint chunks and the lowest
// satisfiable counter value stays the canonical answer at any job count.
inline std::optional<Solution> vc_fpt_feasible(const Instance& inst,
                                               const VcFptOptions& opts = {}) {
    std::vector<Vertex> cover = min_vertex_cover(inst.graph);
    const int csize = static_cast<int>(cover.size());
    if (csize > opts.cover_budget)
        throw BudgetError("vc-fpt refused: cover size " + std::to_string(csize) +
                          " exceeds budget " + std::to_string(opts.cover_budget));

    const uint64_t total = 1ull << csize;
    if (opts.jobs <= 1 || total < 64) {
        for (uint64_t mask = 0; mask < total; ++mask)
            if (auto sol = detail::vc_fpt_try_mask(inst, cover, mask)) return sol;
        return std::nullopt;
    }

    const int jobs = std::min(opts.jobs, 64);
    std::atomic<uint64_t> best{UINT64_MAX};
    std::vector<std::thread> workers;
    const uint64_t chunk = (total + static_cast<uint64_t>(jobs) - 1) / static_cast<uint64_t>(jobs);
    for (int j = 0; j < jobs; ++j) {
        uint64_t lo = chunk * static_cast<uint64_t>(j);
        uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) continue;
        workers.emplace_back([&inst, &cover, &best, lo, hi] {
            for (uint64_t mask = lo; mask < hi; ++mask) {
                if (best.load(std::memory_order_relaxed) <= lo) return;
                if (detail::vc_fpt_try_mask(inst, cover, mask)) {
                    uint64_t cur = best.load();
                    while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
                    }
                    return;
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    uint64_t winner = best.load();
    if (winner == UINT64_MAX) return std::nullopt;
    return detail::vc_fpt_try_mask(inst, cover, winner);
}

}  // namespace mmds
