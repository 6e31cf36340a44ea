#pragma once

// Exhaustive exact solver, the ground truth for every other algorithm.
// Enumerates subsets of the free vertices as a plain binary counter; with
// forcing enabled only supersets of forced_in avoiding forced_out are
// searched. The first feasible subset in counter order (lowest index) is
// the canonical answer, independent of worker count.

#include <atomic>
#include <cstring>
#include <optional>
#include <thread>

#include "checker.hpp"
#include "graph.hpp"

namespace mmds {

struct OracleOptions {
    bool use_forcing = false;
    int budget_free_vertices = 24;  // refuse larger searches
    int jobs = 1;
};

namespace detail {

struct BruteContext {
    const Graph* g;
    int k;
    std::vector<Vertex> free_vertices;
    std::vector<int> base_count;  // membership from forced-in vertices, 1-indexed
};

// Scans masks in [lo, hi) and returns the first feasible one. `stop_below`
// lets workers abort once a better (lower) mask is known globally.
inline std::optional<uint64_t> scan_masks(const BruteContext& ctx, uint64_t lo, uint64_t hi,
                                          const std::atomic<uint64_t>* stop_below) {
    const Graph& g = *ctx.g;
    const int n = g.n();
    const int f = static_cast<int>(ctx.free_vertices.size());
    std::vector<int> count(static_cast<size_t>(n) + 1);
    for (uint64_t mask = lo; mask < hi; ++mask) {
        if (stop_below && (mask & 0xfff) == 0 && stop_below->load(std::memory_order_relaxed) <= lo)
            return std::nullopt;
        std::memcpy(count.data(), ctx.base_count.data(),
                    (static_cast<size_t>(n) + 1) * sizeof(int));
        for (int b = 0; b < f; ++b) {
            if (!(mask >> b & 1)) continue;
            Vertex v = ctx.free_vertices[static_cast<size_t>(b)];
            ++count[static_cast<size_t>(v)];
            for (Vertex u : g.neighbors(v)) ++count[static_cast<size_t>(u)];
        }
        bool ok = true;
        for (Vertex v = 1; v <= n && ok; ++v)
            ok = count[static_cast<size_t>(v)] >= 1 && count[static_cast<size_t>(v)] <= ctx.k;
        if (ok) return mask;
    }
    return std::nullopt;
}

}  // namespace detail

// Returns a feasible solution if one exists, none otherwise. Throws
// BudgetError when the free-vertex count exceeds the configured budget.
inline std::optional<Solution> brute_feasible(const Instance& inst,
                                              const OracleOptions& opts = {}) {
    const Graph& g = inst.graph;
    detail::BruteContext ctx;
    ctx.g = &g;
    ctx.k = inst.k;
    ctx.base_count.assign(static_cast<size_t>(g.n()) + 1, 0);

    std::vector<Vertex> forced_in;
    if (opts.use_forcing) {
        ForcingResult fr = forcing_preprocess(inst);
        if (fr.conflict) return std::nullopt;
        forced_in = fr.forced_in;
        VertexBitset fixed(g.n());
        for (Vertex v : fr.forced_in) fixed.set(v);
        for (Vertex v : fr.forced_out) fixed.set(v);
        for (Vertex v = 1; v <= g.n(); ++v)
            if (!fixed.test(v)) ctx.free_vertices.push_back(v);
        for (Vertex v : forced_in) {
            ++ctx.base_count[static_cast<size_t>(v)];
            for (Vertex u : g.neighbors(v)) ++ctx.base_count[static_cast<size_t>(u)];
        }
    } else {
        for (Vertex v = 1; v <= g.n(); ++v) ctx.free_vertices.push_back(v);
    }

    const int f = static_cast<int>(ctx.free_vertices.size());
    if (f > opts.budget_free_vertices || f > 62)
        throw BudgetError("brute force refused: " + std::to_string(f) +
                          " free vertices exceed budget of " +
                          std::to_string(opts.budget_free_vertices));

    const uint64_t total = 1ull << f;
    std::optional<uint64_t> found;
    if (opts.jobs <= 1 || total < 1024) {
        found = detail::scan_masks(ctx, 0, total, nullptr);
    } else {
        const int jobs = std::min<int>(opts.jobs, 64);
        std::atomic<uint64_t> best{UINT64_MAX};
        std::vector<std::thread> workers;
        const uint64_t chunk = (total + static_cast<uint64_t>(jobs) - 1) / static_cast<uint64_t>(jobs);
        for (int j = 0; j < jobs; ++j) {
            uint64_t lo = chunk * static_cast<uint64_t>(j);
            uint64_t hi = std::min(total, lo + chunk);
            if (lo >= hi) continue;
            workers.emplace_back([&ctx, lo, hi, &best] {
                auto local = detail::scan_masks(ctx, lo, hi, &best);
                if (local) {
                    uint64_t cur = best.load();
                    while (*local < cur && !best.compare_exchange_weak(cur, *local)) {
                    }
                }
            });
        }
        for (auto& w : workers) w.join();
        uint64_t b = best.load();
        if (b != UINT64_MAX) found = b;
    }

    if (!found) return std::nullopt;
    std::vector<Vertex> members = forced_in;
    for (int b = 0; b < f; ++b)
        if (*found >> b & 1) members.push_back(ctx.free_vertices[static_cast<size_t>(b)]);
    return Solution(std::move(members));
}

struct MinMembershipResult {
    int k_star;
    Solution witness;
};

// Least k admitting a feasible solution; 1 <= k_star <= max_degree + 1
// because S = V dominates with membership deg(v) + 1 everywhere.
inline MinMembershipResult brute_min_membership(const Graph& g, const OracleOptions& opts = {}) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    const int upper = g.max_degree() + 1;
    for (int k = 1; k <= upper; ++k) {
        auto sol = brute_feasible(Instance(g, k), opts);
        if (sol) return {k, *sol};
    }
    throw std::logic_error("no feasible k up to max degree + 1");  // unreachable
}

}  // namespace mmds
