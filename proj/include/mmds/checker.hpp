#pragma once

// Feasibility verification: the membership of v in S is |N[v] ∩ S|, and a
// solution is feasible when every vertex has membership in [1, k].

#include <optional>

#include "graph.hpp"

namespace mmds {

inline int membership(const Graph& g, const Solution& s, Vertex v) {
    g.check_vertex(v);
    int count = s.contains(v) ? 1 : 0;
    for (Vertex u : g.neighbors(v))
        if (s.contains(u)) ++count;
    return count;
}

struct FeasibilityVerdict {
    enum class Kind { Feasible, NotDominating, MembershipExceeded };
    Kind kind = Kind::Feasible;
    Vertex witness = 0;   // offending vertex for the two failure kinds
    int value = 0;        // offending membership for MembershipExceeded

    bool ok() const { return kind == Kind::Feasible; }

    std::string to_string() const {
        switch (kind) {
            case Kind::Feasible: return "Feasible";
            case Kind::NotDominating: return "NotDominating " + std::to_string(witness);
            case Kind::MembershipExceeded:
                return "MembershipExceeded " + std::to_string(witness) + " " +
                       std::to_string(value);
        }
        return "";
    }
};

// Scans vertices in ascending order and reports the first violation.
inline FeasibilityVerdict is_feasible(const Instance& inst, const Solution& s) {
    s.check_range(inst.graph);
    for (Vertex v = 1; v <= inst.graph.n(); ++v) {
        int m = membership(inst.graph, s, v);
        if (m == 0) return {FeasibilityVerdict::Kind::NotDominating, v, 0};
        if (m > inst.k) return {FeasibilityVerdict::Kind::MembershipExceeded, v, m};
    }
    return {};
}

struct ForcingResult {
    std::vector<Vertex> forced_in;   // sorted
    std::vector<Vertex> forced_out;  // sorted
    bool conflict = false;
};

// Sound preprocessing rules:
//   R1  a vertex with more than k degree-1 neighbors must be in any solution
//       (else those pendants self-dominate and push its membership past k);
//   R2  a degree-1 neighbor of a forced-in vertex can be dropped from any
//       solution without losing domination or raising any membership.
// conflict is set when the forced choices alone are already infeasible.
inline ForcingResult forcing_preprocess(const Instance& inst) {
    const Graph& g = inst.graph;
    ForcingResult res;
    VertexBitset in(g.n()), out(g.n());

    for (Vertex v = 1; v <= g.n(); ++v) {
        int pendants = 0;
        for (Vertex u : g.neighbors(v))
            if (g.degree(u) == 1) ++pendants;
        if (pendants > inst.k) in.set(v);
    }
    for (Vertex v = 1; v <= g.n(); ++v) {
        if (!in.test(v)) continue;
        for (Vertex u : g.neighbors(v))
            if (g.degree(u) == 1) out.set(u);
    }

    for (Vertex v = 1; v <= g.n(); ++v) {
        if (in.test(v) && out.test(v)) res.conflict = true;
        if (in.test(v)) res.forced_in.push_back(v);
        if (out.test(v)) res.forced_out.push_back(v);
    }
    // Forced vertices alone may already exceed the membership bound somewhere.
    for (Vertex v = 1; v <= g.n() && !res.conflict; ++v) {
        int c = in.test(v) ? 1 : 0;
        for (Vertex u : g.neighbors(v))
            if (in.test(u)) ++c;
        if (c > inst.k) res.conflict = true;
    }
    return res;
}

}  // namespace mmds
