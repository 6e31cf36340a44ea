#pragma once

// Text formats:
//   graphs     "c ..." comments, header "p mmds <n> <m>", edges "e <u> <v>",
//              colored graphs add "n <v> <color>" lines
//   CNF        DIMACS: "p cnf <vars> <clauses>", 0-terminated clauses
//   intervals  "i <id> <left> <right>"
//   solutions  one vertex id per line
// Parsers are strict: any unrecognized non-comment line is an error.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "graph.hpp"

namespace mmds {

namespace detail {

inline bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Splits a line into whitespace-separated tokens.
inline std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline long long to_int(const std::string& tok, int line) {
    size_t pos = 0;
    long long val = 0;
    try {
        val = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "expected integer, got '" + tok + "'");
    return val;
}

struct GraphLines {
    int n = 0;
    long long m = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::pair<Vertex, int>> colors;  // (vertex, color) lines
};

inline GraphLines read_graph_lines(std::istream& in, bool allow_colors) {
    GraphLines out;
    bool have_header = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        auto tok = tokens(line);
        if (tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (tok.size() != 4 || tok[1] != "mmds")
                throw ParseError(lineno, "malformed header, want 'p mmds <n> <m>'");
            long long n = to_int(tok[2], lineno), m = to_int(tok[3], lineno);
            if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
            out.n = static_cast<int>(n);
            out.m = m;
            have_header = true;
        } else if (tok[0] == "e") {
            if (!have_header) throw ParseError(lineno, "edge before header");
            if (tok.size() != 3) throw ParseError(lineno, "malformed edge line");
            long long u = to_int(tok[1], lineno), v = to_int(tok[2], lineno);
            if (u < 1 || u > out.n || v < 1 || v > out.n)
                throw ParseError(lineno, "vertex id out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            out.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else if (allow_colors && tok[0] == "n") {
            if (!have_header) throw ParseError(lineno, "color line before header");
            if (tok.size() != 3) throw ParseError(lineno, "malformed color line");
            long long v = to_int(tok[1], lineno), c = to_int(tok[2], lineno);
            if (v < 1 || v > out.n) throw ParseError(lineno, "vertex id out of range");
            if (c < 1) throw ParseError(lineno, "color must be >= 1");
            out.colors.emplace_back(static_cast<Vertex>(v), static_cast<int>(c));
        } else {
            throw ParseError(lineno, "unrecognized line '" + line + "'");
        }
    }
    if (!have_header) throw ParseError("missing 'p mmds' header");
    if (static_cast<long long>(out.edges.size()) != out.m)
        throw ParseError("edge count " + std::to_string(out.edges.size()) +
                         " does not match header m=" + std::to_string(out.m));
    return out;
}

inline Graph build_graph(const GraphLines& gl) {
    Graph g(gl.n);
    std::vector<std::pair<Vertex, Vertex>> seen;
    seen.reserve(gl.edges.size());
    for (auto [u, v] : gl.edges) seen.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw ParseError("duplicate edge");
    for (auto [u, v] : seen) g.add_edge(u, v);
    g.finish();
    return g;
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
    return detail::build_graph(detail::read_graph_lines(in, /*allow_colors=*/false));
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void serialize_graph(const Graph& g, std::ostream& out) {
    out << "p mmds " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    serialize_graph(g, out);
    return out.str();
}

inline ColoredGraph parse_colored_graph(std::istream& in) {
    auto gl = detail::read_graph_lines(in, /*allow_colors=*/true);
    Graph g = detail::build_graph(gl);
    std::vector<int> color(static_cast<size_t>(gl.n) + 1, 0);
    for (auto [v, c] : gl.colors) {
        if (color[static_cast<size_t>(v)] != 0)
            throw ParseError("vertex " + std::to_string(v) + " colored twice");
        color[static_cast<size_t>(v)] = c;
    }
    for (Vertex v = 1; v <= gl.n; ++v)
        if (color[static_cast<size_t>(v)] == 0)
            throw ParseError("vertex " + std::to_string(v) + " is uncolored");
    try {
        return ColoredGraph(std::move(g), std::move(color));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline ColoredGraph parse_colored_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_colored_graph(in);
}

inline void serialize_colored_graph(const ColoredGraph& cg, std::ostream& out) {
    serialize_graph(cg.graph, out);
    for (Vertex v = 1; v <= cg.graph.n(); ++v)
        out << "n " << v << ' ' << cg.color[static_cast<size_t>(v)] << '\n';
}

inline CnfFormula parse_cnf(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long num_vars = 0, num_clauses = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    bool in_clause = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank(line)) continue;
        auto tok = detail::tokens(line);
        if (tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (tok.size() != 4 || tok[1] != "cnf")
                throw ParseError(lineno, "malformed header, want 'p cnf <vars> <clauses>'");
            num_vars = detail::to_int(tok[2], lineno);
            num_clauses = detail::to_int(tok[3], lineno);
            if (num_vars < 0 || num_clauses < 0)
                throw ParseError(lineno, "negative count in header");
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "clause before header");
        for (const auto& t : tok) {
            long long lit = detail::to_int(t, lineno);
            if (lit == 0) {
                clauses.push_back(current);
                current.clear();
                in_clause = false;
            } else {
                if (std::abs(lit) > num_vars)
                    throw ParseError(lineno, "literal " + t + " out of range");
                current.push_back(static_cast<int>(lit));
                in_clause = true;
            }
        }
    }
    if (!have_header) throw ParseError("missing 'p cnf' header");
    if (in_clause) throw ParseError("clause not 0-terminated");
    if (static_cast<long long>(clauses.size()) != num_clauses)
        throw ParseError("clause count " + std::to_string(clauses.size()) +
                         " does not match header " + std::to_string(num_clauses));
    return CnfFormula(static_cast<int>(num_vars), std::move(clauses));
}

inline CnfFormula parse_cnf(const std::string& text) {
    std::istringstream in(text);
    return parse_cnf(in);
}

inline void serialize_cnf(const CnfFormula& f, std::ostream& out) {
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
}

inline IntervalSet parse_intervals(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<IntervalSet::Interval> items;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank(line)) continue;
        auto tok = detail::tokens(line);
        if (tok[0] == "c") continue;
        if (tok[0] != "i" || tok.size() != 4)
            throw ParseError(lineno, "unrecognized line '" + line + "'");
        long long id = detail::to_int(tok[1], lineno);
        long long l = detail::to_int(tok[2], lineno);
        long long r = detail::to_int(tok[3], lineno);
        if (l > r) throw ParseError(lineno, "interval with left > right");
        items.push_back({static_cast<int>(id), l, r});
    }
    try {
        return IntervalSet(std::move(items));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline IntervalSet parse_intervals(const std::string& text) {
    std::istringstream in(text);
    return parse_intervals(in);
}

inline void serialize_intervals(const IntervalSet& iv, std::ostream& out) {
    for (const auto& it : iv.items)
        out << "i " << it.id << ' ' << it.left << ' ' << it.right << '\n';
}

inline Solution parse_solution(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<Vertex> members;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank(line)) continue;
        auto tok = detail::tokens(line);
        if (tok[0] == "c") continue;
        if (tok.size() != 1) throw ParseError(lineno, "expected one vertex id per line");
        members.push_back(static_cast<Vertex>(detail::to_int(tok[0], lineno)));
    }
    try {
        return Solution(std::move(members));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline Solution parse_solution(const std::string& text) {
    std::istringstream in(text);
    return parse_solution(in);
}

inline void serialize_solution(const Solution& s, std::ostream& out) {
    for (Vertex v : s.members) out << v << '\n';
}

}  // namespace mmds
