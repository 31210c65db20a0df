#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "symds/matrix.hpp"

namespace symds {

// Simple undirected graph with optional loops, vertices 1..n.
class LoopyGraph {
public:
    struct Component {
        enum class Kind { Loop, Edge, Cycle, Other };
        Kind kind = Kind::Other;
        std::vector<int> vertices;     // sorted ascending
        std::vector<int> cycle_order;  // for Kind::Cycle: canonical traversal
    };

    explicit LoopyGraph(int n)
        : n_(n), adj_(static_cast<size_t>(n) + 1), loop_(static_cast<size_t>(n) + 1, 0) {
        if (n < 1) throw std::invalid_argument("LoopyGraph: order must be positive");
    }

    int order() const { return n_; }

    void add_edge(int i, int j) {
        check(i);
        check(j);
        if (i == j) {
            loop_[static_cast<size_t>(i)] = 1;
            return;
        }
        adj_[static_cast<size_t>(i)].insert(j);
        adj_[static_cast<size_t>(j)].insert(i);
    }

    bool has_loop(int i) const {
        check(i);
        return loop_[static_cast<size_t>(i)] != 0;
    }

    bool has_edge(int i, int j) const {
        check(i);
        check(j);
        if (i == j) return has_loop(i);
        return adj_[static_cast<size_t>(i)].count(j) > 0;
    }

    const std::set<int>& neighbors(int i) const {
        check(i);
        return adj_[static_cast<size_t>(i)];
    }

    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

    bool is_isolated(int i) const { return degree(i) == 0 && !has_loop(i); }

    // Connected components over vertices that carry at least one incidence
    // (loops count). Isolated bare vertices are skipped.
    std::vector<Component> components() const {
        std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
        std::vector<Component> out;
        for (int s = 1; s <= n_; ++s) {
            if (seen[static_cast<size_t>(s)] || is_isolated(s)) continue;
            Component c;
            std::vector<int> stack{s};
            seen[static_cast<size_t>(s)] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                c.vertices.push_back(v);
                for (int w : adj_[static_cast<size_t>(v)])
                    if (!seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = 1;
                        stack.push_back(w);
                    }
            }
            std::sort(c.vertices.begin(), c.vertices.end());
            classify_component(c);
            out.push_back(std::move(c));
        }
        return out;
    }

private:
    void check(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("LoopyGraph: vertex");
    }

    void classify_component(Component& c) const {
        using Kind = Component::Kind;
        const auto& vs = c.vertices;
        if (vs.size() == 1) {
            int v = vs[0];
            if (has_loop(v) && degree(v) == 0) c.kind = Kind::Loop;
            return;  // otherwise Other (loop plus edges is impossible for size 1)
        }
        // Any loop inside a multi-vertex component disqualifies Edge/Cycle.
        for (int v : vs)
            if (has_loop(v)) return;
        if (vs.size() == 2) {
            if (degree(vs[0]) == 1 && degree(vs[1]) == 1) c.kind = Kind::Edge;
            return;
        }
        for (int v : vs)
            if (degree(v) != 2) return;
        // Connected, all degrees 2, at least 3 vertices: a cycle. Canonical
        // traversal starts at the smallest vertex toward its smaller neighbor.
        int start = vs[0];
        c.cycle_order.clear();
        c.cycle_order.push_back(start);
        int prev = start;
        int cur = *neighbors(start).begin();
        while (cur != start) {
            c.cycle_order.push_back(cur);
            const auto& nb = neighbors(cur);
            auto it = nb.begin();
            int nxt = (*it == prev) ? *std::next(it) : *it;
            prev = cur;
            cur = nxt;
        }
        c.kind = Kind::Cycle;
    }

    int n_;
    std::vector<std::set<int>> adj_;
    std::vector<char> loop_;
};

// Graph of the nonzero off-diagonal pattern of a symmetric matrix plus loops
// on nonzero diagonal entries. With hankel = true the input must instead be
// Hankel-symmetric and the pairing is taken across the antidiagonal: entry
// (i, j) joins i and n+1-j, and entries on the antidiagonal become loops.
inline LoopyGraph loopy_graph(const ExactMatrix& a, bool hankel = false) {
    if (hankel ? !is_hankel_symmetric(a) : !is_symmetric(a))
        throw std::invalid_argument(hankel ? "loopy_graph: matrix is not Hankel-symmetric"
                                           : "loopy_graph: matrix is not symmetric");
    const int n = a.order();
    LoopyGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (a.at(i, j).is_zero()) continue;
            int u = i, v = hankel ? n + 1 - j : j;
            g.add_edge(u, v);
        }
    return g;
}

// Directed multigraph of a nonnegative integral matrix: arc i -> j appears
// with multiplicity a(i, j). Arcs are sorted lexicographically.
struct Digraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> arcs;  // repeated per multiplicity, sorted

    bool operator==(const Digraph& o) const = default;
};

inline Digraph digraph(const ExactMatrix& a) {
    const int n = a.order();
    Digraph g;
    g.vertex_count = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Rational& v = a.at(i, j);
            if (!v.is_integer() || v.sign() < 0)
                throw std::invalid_argument("digraph: entries must be nonnegative integers");
            long m = v.to_long();
            for (long k = 0; k < m; ++k) g.arcs.emplace_back(i, j);
        }
    return g;
}

// Bipartite incidence graph on 2n vertices: row i is vertex i, column j is
// vertex n + j, with an edge for every nonzero entry.
inline LoopyGraph bipartite_graph(const ExactMatrix& a) {
    const int n = a.order();
    LoopyGraph g(2 * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!a.at(i, j).is_zero()) g.add_edge(i, n + j);
    return g;
}

}  // namespace symds
