#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symds/decompose.hpp"
#include "symds/graphs.hpp"
#include "symds/linalg.hpp"
#include "symds/matrix.hpp"
#include "symds/perm_classes.hpp"
#include "symds/permutation.hpp"

namespace symds {

struct ExtremeVerdict {
    bool is_extreme = false;
    // Short tag naming the structure that decided the verdict.
    std::string structure;
    // For non-extreme points: two distinct members of the same polytope whose
    // midpoint is the input.
    std::optional<std::pair<ExactMatrix, ExactMatrix>> witness;
};

// ---- Exact rigidity oracle ---------------------------------------------------

// Orbits of the support cells under the symmetry group of the class, sorted by
// their smallest cell. Every cell of an orbit must lie in the support (true
// for any matrix carrying the class symmetry).
inline std::vector<std::vector<std::pair<int, int>>> support_orbits(const ExactMatrix& a, SymmetryClass cls) {
    const int n = a.order();
    auto t_op = [&](std::pair<int, int> c) { return std::make_pair(c.second, c.first); };
    auto h_op = [&](std::pair<int, int> c) { return std::make_pair(n + 1 - c.second, n + 1 - c.first); };
    auto pi_op = [&](std::pair<int, int> c) { return std::make_pair(n + 1 - c.first, n + 1 - c.second); };
    std::vector<std::vector<std::pair<int, int>>> orbits;
    std::set<std::pair<int, int>> seen;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (a.at(i, j).is_zero() || seen.count({i, j})) continue;
            std::vector<std::pair<int, int>> orbit;
            std::vector<std::pair<int, int>> stack{{i, j}};
            seen.insert({i, j});
            while (!stack.empty()) {
                auto c = stack.back();
                stack.pop_back();
                orbit.push_back(c);
                std::vector<std::pair<int, int>> images;
                switch (cls) {
                    case SymmetryClass::DS: break;
                    case SymmetryClass::T: images = {t_op(c)}; break;
                    case SymmetryClass::H: images = {h_op(c)}; break;
                    case SymmetryClass::PI: images = {pi_op(c)}; break;
                    case SymmetryClass::TH: images = {t_op(c), h_op(c), pi_op(c)}; break;
                }
                for (auto img : images) {
                    if (seen.count(img)) continue;
                    if (a.at(img.first, img.second).is_zero())
                        throw std::logic_error("support_orbits: support is not closed under the class symmetry");
                    seen.insert(img);
                    stack.push_back(img);
                }
            }
            std::sort(orbit.begin(), orbit.end());
            orbits.push_back(std::move(orbit));
        }
    return orbits;
}

// Basis of the space of symmetry-respecting perturbations: matrices X with
// support inside the support of `a`, zero row and column sums, constant on
// each symmetry orbit. The matrix is an extreme point exactly when this space
// is trivial.
inline std::vector<ExactMatrix> extremality_kernel(const ExactMatrix& a, SymmetryClass cls) {
    const int n = a.order();
    auto orbits = support_orbits(a, cls);
    const size_t v = orbits.size();
    std::vector<std::vector<Rational>> rows(2 * static_cast<size_t>(n), std::vector<Rational>(v));
    for (size_t o = 0; o < v; ++o)
        for (auto [i, j] : orbits[o]) {
            rows[static_cast<size_t>(i - 1)][o] += 1;
            rows[static_cast<size_t>(n + j - 1)][o] += 1;
        }
    auto kernel = nullspace_basis(rows, static_cast<int>(v));
    std::vector<ExactMatrix> out;
    for (const auto& lambda : kernel) {
        ExactMatrix x(n);
        for (size_t o = 0; o < v; ++o)
            for (auto [i, j] : orbits[o]) x.at(i, j) = lambda[o];
        out.push_back(std::move(x));
    }
    return out;
}

inline bool is_extreme_oracle(const ExactMatrix& a, SymmetryClass cls) {
    return extremality_kernel(a, cls).empty();
}

// Two distinct class members with midpoint `a`, built from the first kernel
// direction; nullopt when `a` is rigid (extreme).
inline std::optional<std::pair<ExactMatrix, ExactMatrix>> deformation_witness(const ExactMatrix& a,
                                                                              SymmetryClass cls) {
    auto kernel = extremality_kernel(a, cls);
    if (kernel.empty()) return std::nullopt;
    const ExactMatrix& x = kernel.front();
    const int n = a.order();
    bool first = true;
    Rational eps;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (x.at(i, j).is_zero()) continue;
            Rational cand = a.at(i, j) / abs(x.at(i, j));
            if (first || cand < eps) {
                eps = cand;
                first = false;
            }
        }
    if (first || eps.sign() <= 0) throw std::logic_error("deformation_witness: degenerate kernel direction");
    ExactMatrix b1 = a, b2 = a;
    ExactMatrix scaled = eps * x;
    b1 += scaled;
    b2 -= scaled;
    return std::make_pair(std::move(b1), std::move(b2));
}

// ---- Cycle geometry under the half-turn ----------------------------------------

enum class PiCycleAction { NotInvariant, Rotation, Reflection };

// How the half-turn i -> n+1-i acts on a cycle given by its vertex order:
// Rotation preserves the traversal orientation, Reflection reverses it,
// NotInvariant means the vertex set is not fixed.
inline PiCycleAction pi_action_on_cycle(const std::vector<int>& cycle, int n) {
    const size_t k = cycle.size();
    if (k == 0) throw std::invalid_argument("pi_action_on_cycle: empty cycle");
    std::set<int> vs(cycle.begin(), cycle.end());
    for (int v : cycle)
        if (!vs.count(n + 1 - v)) return PiCycleAction::NotInvariant;
    size_t s = k;
    for (size_t t = 0; t < k; ++t)
        if (cycle[t] == n + 1 - cycle[0]) {
            s = t;
            break;
        }
    if (s == k) return PiCycleAction::NotInvariant;
    bool forward = true, backward = true;
    for (size_t t = 0; t < k; ++t) {
        int img = n + 1 - cycle[t];
        if (img != cycle[(s + t) % k]) forward = false;
        if (img != cycle[(s + k - t) % k]) backward = false;
    }
    if (forward) return PiCycleAction::Rotation;
    if (backward) return PiCycleAction::Reflection;
    return PiCycleAction::NotInvariant;
}

// Cycles of a centrosymmetric permutation, each flagged by whether the
// half-turn maps the cycle to itself (self-paired) or to a different cycle of
// the permutation (mirror-paired).
struct CycleClass {
    std::vector<int> cycle;
    bool self_paired = false;
};

inline std::vector<CycleClass> cycle_structure(const Permutation& p) {
    if (!is_centrosymmetric(p)) throw std::invalid_argument("cycle_structure: permutation must be centrosymmetric");
    const int n = p.order();
    std::vector<CycleClass> out;
    for (const auto& cyc : p.cycles()) {
        std::set<int> vs(cyc.begin(), cyc.end());
        bool self = true;
        for (int v : cyc)
            if (!vs.count(n + 1 - v)) {
                self = false;
                break;
            }
        out.push_back({cyc, self});
    }
    return out;
}

// Whether an odd-order permutation matrix P has support disjoint from its
// half-turn image and the bipartite pattern graph of P + P^pi is one single
// cycle through every row and column. Such matrices are exactly the fractional
// cores 1/2 (P + P^pi) of extreme points of the odd-order centrosymmetric
// polytope.
inline bool anti_centro_cyclic(const Permutation& p) {
    const int r = p.order();
    if (r % 2 == 0) throw std::invalid_argument("anti_centro_cyclic: odd order required");
    const Permutation q = rotate_pi(p);
    for (int i = 1; i <= r; ++i)
        if (p(i) == q(i)) return false;  // supports meet, including a center hit
    ExactMatrix s = to_matrix(p) + to_matrix(q);
    auto comps = bipartite_graph(s).components();
    return comps.size() == 1 && comps[0].kind == LoopyGraph::Component::Kind::Cycle &&
           static_cast<int>(comps[0].vertices.size()) == 2 * r;
}

// ---- Structural classifiers ------------------------------------------------------

namespace detail {

// Walk from `from` through its neighbor `via` along plain chain vertices
// (degree 2, no loop). Returns the interior chain (excluding both `from` and
// the stopping vertex) and the stopping vertex, which is the first vertex that
// is not a plain chain vertex — possibly `from` itself when the walk closes.
struct ChainWalk {
    std::vector<int> interior;
    int stop = 0;
};

inline ChainWalk chain_walk(const LoopyGraph& g, int from, int via) {
    ChainWalk w;
    int prev = from, cur = via;
    while (cur != from && g.degree(cur) == 2 && !g.has_loop(cur)) {
        w.interior.push_back(cur);
        const auto& nb = g.neighbors(cur);
        auto it = nb.begin();
        int nxt = (*it == prev) ? *std::next(it) : *it;
        prev = cur;
        cur = nxt;
    }
    w.stop = cur;
    return w;
}

inline std::set<int> pi_image(const std::set<int>& s, int n) {
    std::set<int> out;
    for (int v : s) out.insert(n + 1 - v);
    return out;
}

// Component rules for the symmetric class: each component must be a loop, a
// single edge, or an odd cycle.
inline bool sym_component_ok(const LoopyGraph::Component& c) {
    using Kind = LoopyGraph::Component::Kind;
    switch (c.kind) {
        case Kind::Loop:
        case Kind::Edge: return true;
        case Kind::Cycle: return c.vertices.size() % 2 == 1;
        case Kind::Other: return false;
    }
    return false;
}

// Rules for a component of a doubly symmetric matrix that does not contain the
// central vertex. Mirror-paired components follow the symmetric-class rules;
// a self-paired component may be a mirror edge {u, n+1-u} or an even cycle on
// which the half-turn acts as the rotation, with length = 2 (mod 4).
inline bool th_noncentral_ok(const LoopyGraph::Component& c, bool self_paired, int n) {
    using Kind = LoopyGraph::Component::Kind;
    if (!self_paired) return sym_component_ok(c);
    switch (c.kind) {
        case Kind::Loop: return false;  // a self-paired loop sits at the center only
        case Kind::Edge: return true;
        case Kind::Cycle: {
            if (c.vertices.size() % 2 != 0) return false;
            return pi_action_on_cycle(c.cycle_order, n) == PiCycleAction::Rotation && c.cycle_order.size() % 4 == 2;
        }
        case Kind::Other: return false;
    }
    return false;
}

// Central-component rules for odd-order doubly symmetric matrices. The
// component of the central vertex c must be one of: a loop at c; an odd cycle
// through c; two equal odd cycles hung on the two ends of an even chain
// through c (chain length zero: both cycles meet at c, which then has degree
// four), the half-turn exchanging the two cycles; or an even cycle whose two
// antipodal vertices are joined by an even chain through c, the half-turn
// exchanging the two arcs.
inline bool th_central_ok(const LoopyGraph& g, const LoopyGraph::Component& comp, int c, int n, std::string& tag) {
    using Kind = LoopyGraph::Component::Kind;
    if (comp.kind == Kind::Loop) {
        tag = "central loop";
        return true;
    }
    if (comp.kind == Kind::Cycle) {
        if (comp.vertices.size() % 2 == 0) return false;  // cannot occur: a cycle through c is odd
        tag = "central odd cycle";
        return true;
    }
    if (comp.kind != Kind::Other) return false;  // an edge at c cannot be half-turn invariant
    if (g.has_loop(c)) return false;
    const auto& nbc = g.neighbors(c);
    if (nbc.size() == 2) {
        auto it = nbc.begin();
        const int via1 = *it, via2 = *std::next(it);
        ChainWalk w1 = chain_walk(g, c, via1);
        ChainWalk w2 = chain_walk(g, c, via2);
        if (w1.stop == c || w2.stop == c) return false;  // closed cycle is Kind::Cycle, not Other
        const int s1 = w1.stop, s2 = w2.stop;
        if (s1 == s2) return false;
        auto is_loop_end = [&](int s) { return g.has_loop(s) && g.degree(s) == 1; };
        auto is_junction = [&](int s) { return !g.has_loop(s) && g.degree(s) == 3; };
        std::set<int> consumed(comp.vertices.begin(), comp.vertices.end());
        std::set<int> visited{c};
        for (int v : w1.interior) visited.insert(v);
        for (int v : w2.interior) visited.insert(v);
        visited.insert(s1);
        visited.insert(s2);
        if (is_loop_end(s1) && is_loop_end(s2)) {
            tag = "central chain with loop ends";
            return visited == consumed;
        }
        if (!is_junction(s1) || !is_junction(s2)) return false;
        // Side edges at s1, excluding the chain it came from.
        const int back1 = w1.interior.empty() ? c : w1.interior.back();
        std::vector<int> sides1;
        for (int u : g.neighbors(s1))
            if (u != back1) sides1.push_back(u);
        if (sides1.size() != 2) return false;
        ChainWalk a1 = chain_walk(g, s1, sides1[0]);
        ChainWalk a2 = chain_walk(g, s1, sides1[1]);
        if (a1.stop == s1 && a2.stop == s1) {
            // Two equal odd cycles at the two chain ends.
            // a1 and a2 both closed back to s1 along the same cycle; the cycle
            // interior is a1.interior (== reverse of a2.interior).
            std::set<int> c1(a1.interior.begin(), a1.interior.end());
            std::set<int> c1b(a2.interior.begin(), a2.interior.end());
            if (c1 != c1b) return false;
            const size_t len1 = c1.size() + 1;  // cycle vertices incl. s1
            if (len1 % 2 == 0) return false;
            const int back2 = w2.interior.empty() ? c : w2.interior.back();
            std::vector<int> sides2;
            for (int u : g.neighbors(s2))
                if (u != back2) sides2.push_back(u);
            if (sides2.size() != 2) return false;
            ChainWalk b1 = chain_walk(g, s2, sides2[0]);
            ChainWalk b2 = chain_walk(g, s2, sides2[1]);
            if (b1.stop != s2 || b2.stop != s2) return false;
            std::set<int> c2(b1.interior.begin(), b1.interior.end());
            std::set<int> c2b(b2.interior.begin(), b2.interior.end());
            if (c2 != c2b) return false;
            const size_t len2 = c2.size() + 1;
            if (len2 != len1) return false;
            for (int v : c1) visited.insert(v);
            for (int v : c2) visited.insert(v);
            tag = "central chain joining odd cycles";
            return visited == consumed;
        }
        if (a1.stop == s2 && a2.stop == s2) {
            // Even cycle bisected by the chain: two arcs from s1 to s2.
            std::set<int> arc1(a1.interior.begin(), a1.interior.end());
            std::set<int> arc2(a2.interior.begin(), a2.interior.end());
            if (arc1.empty() || arc2.empty()) return false;
            if (arc1.size() != arc2.size()) return false;
            std::vector<int> shared;
            std::set_intersection(arc1.begin(), arc1.end(), arc2.begin(), arc2.end(), std::back_inserter(shared));
            if (!shared.empty()) return false;
            // The half-turn must exchange the two arcs; fixing each arc leaves
            // a sliding deformation.
            if (pi_image(arc1, n) != arc2) return false;
            for (int v : arc1) visited.insert(v);
            for (int v : arc2) visited.insert(v);
            tag = "central bisected even cycle";
            return visited == consumed;
        }
        return false;
    }
    if (nbc.size() == 4) {
        // Two odd cycles meeting at c, exchanged by the half-turn.
        std::vector<int> nb(nbc.begin(), nbc.end());
        ChainWalk first = chain_walk(g, c, nb[0]);
        if (first.stop != c) return false;
        std::set<int> cyc1(first.interior.begin(), first.interior.end());
        if ((cyc1.size() + 1) % 2 == 0) return false;
        // The walk consumed nb[0] and the neighbor it re-entered c through.
        std::vector<int> rest;
        for (int u : nb)
            if (!cyc1.count(u)) rest.push_back(u);
        if (rest.size() != 2) return false;
        ChainWalk second = chain_walk(g, c, rest[0]);
        if (second.stop != c) return false;
        std::set<int> cyc2(second.interior.begin(), second.interior.end());
        if (cyc2.size() != cyc1.size()) return false;
        std::vector<int> shared;
        std::set_intersection(cyc1.begin(), cyc1.end(), cyc2.begin(), cyc2.end(), std::back_inserter(shared));
        if (!shared.empty()) return false;
        if (pi_image(cyc1, n) != cyc2) return false;
        std::set<int> visited{c};
        for (int v : cyc1) visited.insert(v);
        for (int v : cyc2) visited.insert(v);
        std::set<int> consumed(comp.vertices.begin(), comp.vertices.end());
        tag = "central double odd cycle";
        return visited == consumed;
    }
    return false;
}

struct ComponentScan {
    bool ok = true;
    std::string tag;
};

// Scan all components of the pattern graph of a doubly symmetric matrix.
inline ComponentScan th_scan(const ExactMatrix& a) {
    const int n = a.order();
    const int c = (n + 1) / 2;
    LoopyGraph g = loopy_graph(a);
    auto comps = g.components();
    std::map<std::vector<int>, size_t> by_vertices;
    for (size_t k = 0; k < comps.size(); ++k) by_vertices[comps[k].vertices] = k;
    std::vector<char> done(comps.size(), 0);
    ComponentScan scan;
    std::vector<std::string> tags;
    for (size_t k = 0; k < comps.size(); ++k) {
        if (done[k]) continue;
        done[k] = 1;
        const auto& comp = comps[k];
        std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
        std::set<int> img = pi_image(vs, n);
        const bool self_paired = (img == vs);
        if (!self_paired) {
            std::vector<int> img_sorted(img.begin(), img.end());
            auto it = by_vertices.find(img_sorted);
            if (it == by_vertices.end()) throw std::logic_error("th_scan: half-turn image is not a component");
            done[it->second] = 1;
        }
        const bool central = (n % 2 == 1) && vs.count(c) > 0;
        if (central) {
            std::string tag;
            if (!th_central_ok(g, comp, c, n, tag)) {
                scan.ok = false;
                scan.tag = "central component not rigid";
                return scan;
            }
            tags.push_back(tag);
        } else {
            if (!th_noncentral_ok(comp, self_paired, n)) {
                scan.ok = false;
                scan.tag = "deformable component";
                return scan;
            }
        }
    }
    scan.tag = tags.empty() ? "loops, edges, odd cycles, rigid even cycles" : tags.front();
    return scan;
}

}  // namespace detail

// Structural extreme-point test for the class polytope, with an exact witness
// pair for non-extreme inputs. Throws std::invalid_argument when the matrix is
// not a member of the polytope (doubly stochastic with the class symmetry).
inline ExtremeVerdict is_extreme(const ExactMatrix& a, SymmetryClass cls, bool want_witness = true) {
    if (!is_doubly_stochastic(a)) throw std::invalid_argument("is_extreme: matrix is not doubly stochastic");
    if (!has_symmetry(a, cls)) throw std::invalid_argument("is_extreme: matrix lacks the class symmetry");
    const int n = a.order();
    ExtremeVerdict v;
    switch (cls) {
        case SymmetryClass::DS: {
            v.is_extreme = is_permutation_matrix(a);
            v.structure = v.is_extreme ? "permutation matrix" : "fractional support";
            break;
        }
        case SymmetryClass::T: {
            bool ok = true;
            for (const auto& comp : loopy_graph(a).components())
                if (!detail::sym_component_ok(comp)) {
                    ok = false;
                    break;
                }
            v.is_extreme = ok;
            v.structure = ok ? "loops, edges, odd cycles" : "deformable component";
            break;
        }
        case SymmetryClass::H: {
            // Reflect into the symmetric frame: b(i,j) = a(i, n+1-j) is
            // symmetric and the correspondence preserves extremality.
            ExactMatrix b(n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) b.at(i, j) = a.at(i, n + 1 - j);
            ExtremeVerdict inner = is_extreme(b, SymmetryClass::T, false);
            v.is_extreme = inner.is_extreme;
            v.structure = inner.structure + " (antidiagonal frame)";
            break;
        }
        case SymmetryClass::PI: {
            if (is_permutation_matrix(a)) {
                v.is_extreme = true;
                v.structure = "centrosymmetric permutation matrix";
                break;
            }
            if (n % 2 == 0) {
                v.is_extreme = false;
                v.structure = "fractional support";
                break;
            }
            const int c = (n + 1) / 2;
            if (!a.at(c, c).is_zero()) {
                v.is_extreme = false;
                v.structure = "fractional support with occupied center";
                break;
            }
            LoopyGraph bg = bipartite_graph(a);
            bool ok = true;
            std::string tag = "central half cycle";
            for (const auto& comp : bg.components()) {
                const bool has_central_row =
                    std::find(comp.vertices.begin(), comp.vertices.end(), c) != comp.vertices.end();
                if (has_central_row) {
                    if (comp.kind != LoopyGraph::Component::Kind::Cycle) {
                        ok = false;
                        break;
                    }
                } else if (comp.kind != LoopyGraph::Component::Kind::Edge) {
                    ok = false;
                    break;
                }
            }
            v.is_extreme = ok;
            v.structure = ok ? tag : "deformable support";
            break;
        }
        case SymmetryClass::TH: {
            detail::ComponentScan scan = detail::th_scan(a);
            v.is_extreme = scan.ok;
            v.structure = scan.tag;
            if (n % 2 == 1 && v.is_extreme != is_extreme_oracle(a, SymmetryClass::TH))
                throw std::logic_error("is_extreme: structural rule disagrees with the rigidity oracle");
            break;
        }
    }
    if (!v.is_extreme && want_witness) {
        v.witness = deformation_witness(a, cls);
        if (!v.witness) throw std::logic_error("is_extreme: non-extreme point has no deformation");
    }
    return v;
}

// All extreme points of the class polytope, ascending by printable key. Every
// extreme point is the class symmetrization of some permutation matrix, so the
// enumeration walks all permutations and keeps the rigid symmetrizations.
inline std::vector<ExactMatrix> enumerate_extreme(int n, SymmetryClass cls, int limit = 7) {
    if (n < 1) throw std::invalid_argument("enumerate_extreme: order must be positive");
    if (n > limit) throw std::invalid_argument("enumerate_extreme: order exceeds the enumeration limit");
    std::map<std::string, ExactMatrix> uniq;
    PermClassStream all(n, SymmetryClass::DS);
    while (auto p = all.next()) {
        ExactMatrix m = symmetrization(*p, cls);
        if (is_extreme(m, cls, false).is_extreme) uniq.emplace(to_string(m), std::move(m));
    }
    std::vector<ExactMatrix> out;
    out.reserve(uniq.size());
    for (auto& [key, m] : uniq) out.push_back(std::move(m));
    return out;
}

}  // namespace symds
