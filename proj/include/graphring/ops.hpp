#pragma once

#include <graphring/clique.hpp>
#include <graphring/graph.hpp>

#include <algorithm>
#include <cstddef>
#include <unordered_set>
#include <vector>

namespace graphring {

/// Graph join G + H: disjoint union plus every cross edge. G's vertices come first.
inline auto join(const Graph & g, const Graph & h) -> Graph
{
    const auto ng = g.size(), nh = h.size();
    check_vertex_count(ng + nh, "join");
    GraphBuilder b(ng + nh, "join");
    for (std::size_t u = 0; u < ng; ++u) {
        VertexSet row(ng + nh);
        g.neighbours(u).for_each([&](std::size_t v) { row.set(v); });
        for (std::size_t w = 0; w < nh; ++w)
            row.set(ng + w);
        b.set_row(u, std::move(row));
    }
    for (std::size_t u = 0; u < nh; ++u) {
        VertexSet row(ng + nh);
        for (std::size_t w = 0; w < ng; ++w)
            row.set(w);
        h.neighbours(u).for_each([&](std::size_t v) { row.set(ng + v); });
        b.set_row(ng + u, std::move(row));
    }
    return std::move(b).build();
}

/// Disjunctive product G * H on V(G) x V(H), row-major: (v,w) has index v*|H| + w.
/// (v,w) ~ (v',w') iff v ~ v' or w ~ w'.
inline auto disjunctive(const Graph & g, const Graph & h) -> Graph
{
    const auto ng = g.size(), nh = h.size();
    const auto n = checked_product_size(ng, nh, "disjunctive product");
    GraphBuilder b(n, "disjunctive product");
    for (std::size_t v = 0; v < ng; ++v)
        for (std::size_t w = 0; w < nh; ++w) {
            VertexSet row(n);
            for (std::size_t v2 = 0; v2 < ng; ++v2) {
                if (g.adjacent(v, v2))
                    for (std::size_t w2 = 0; w2 < nh; ++w2)
                        row.set(v2 * nh + w2);
                else
                    h.neighbours(w).for_each([&](std::size_t w2) { row.set(v2 * nh + w2); });
            }
            b.set_row(v * nh + w, std::move(row));
        }
    return std::move(b).build();
}

/// Lexicographic product G ⋉ H, row-major: (v,w) ~ (v',w') iff v ~ v', or v = v' and w ~ w'.
inline auto lexicographic(const Graph & g, const Graph & h) -> Graph
{
    const auto ng = g.size(), nh = h.size();
    const auto n = checked_product_size(ng, nh, "lexicographic product");
    GraphBuilder b(n, "lexicographic product");
    for (std::size_t v = 0; v < ng; ++v)
        for (std::size_t w = 0; w < nh; ++w) {
            VertexSet row(n);
            g.neighbours(v).for_each([&](std::size_t v2) {
                for (std::size_t w2 = 0; w2 < nh; ++w2)
                    row.set(v2 * nh + w2);
            });
            h.neighbours(w).for_each([&](std::size_t w2) { row.set(v * nh + w2); });
            b.set_row(v * nh + w, std::move(row));
        }
    return std::move(b).build();
}

/// d-fold blowup G ⋉ K_d: vertex (v, i) has index v*d + i.
inline auto blowup(const Graph & g, std::size_t d) -> Graph
{
    if (d == 0)
        throw Error(ErrorKind::InvalidParameter, "blowup factor must be at least 1");
    return lexicographic(g, complete(d));
}

/// Disjunctive power G^{*k}; G^{*0} = K_1.
inline auto disjunctive_power(const Graph & g, std::size_t k) -> Graph
{
    Graph result = complete(1);
    for (std::size_t i = 0; i < k; ++i)
        result = disjunctive(result, g);
    return result;
}

/// S^perp: vertices adjacent to every member of S. perp of the empty set is V(G).
inline auto perp(const Graph & g, const VertexSet & s) -> VertexSet
{
    if (s.universe() != g.size())
        throw Error(ErrorKind::InvalidSet, "vertex set does not match graph size");
    auto result = g.vertices();
    s.for_each([&](std::size_t v) { result &= g.neighbours(v); });
    return result;
}

/// S^perp^perp.
inline auto closure(const Graph & g, const VertexSet & s) -> VertexSet { return perp(g, perp(g, s)); }

/// Clique number of the subgraph induced on the closure of S.
inline auto rank(const Graph & g, const VertexSet & s) -> std::size_t { return omega_within(g, closure(g, s)); }

/// Power-graph adjacency: S and T nonempty, and every s in S is adjacent to every t in T
/// (disjointness follows since graphs are irreflexive).
inline auto power_adjacent(const Graph & g, const VertexSet & s, const VertexSet & t) -> bool
{
    return s.any() && t.any() && t.is_subset_of(perp(g, s));
}

inline constexpr std::size_t power_graph_max_vertices = 12;

/// Power graph 2^G: vertex i is the subset with bitmask i.
inline auto power_graph(const Graph & g) -> Graph
{
    const auto n = g.size();
    if (n > power_graph_max_vertices)
        throw Error(ErrorKind::SizeCap, "power graph of a " + std::to_string(n) + "-vertex graph (limit " +
                std::to_string(power_graph_max_vertices) + ")");
    const std::size_t count = std::size_t{1} << n;
    check_vertex_count(count, "power graph");
    std::vector<std::size_t> perp_mask(count, 0);
    std::vector<std::size_t> nbr_mask(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        g.neighbours(v).for_each([&](std::size_t u) { nbr_mask[v] |= std::size_t{1} << u; });
    for (std::size_t s = 0; s < count; ++s) {
        std::size_t p = count - 1;
        for (std::size_t v = 0; v < n; ++v)
            if (s >> v & 1)
                p &= nbr_mask[v];
        perp_mask[s] = p;
    }
    GraphBuilder b(count, "power graph");
    for (std::size_t s = 1; s < count; ++s)
        for (std::size_t t = s + 1; t < count; ++t)
            if ((t & ~perp_mask[s]) == 0)
                b.add_edge(s, t);
    return std::move(b).build();
}

/// d-fractionalization G/d: vertices are the d-cliques of G in lexicographic order,
/// adjacent when disjoint and fully cross-adjacent. Empty if G has no d-clique.
inline auto fractionalize(const Graph & g, std::size_t d) -> Graph
{
    if (d == 0)
        throw Error(ErrorKind::InvalidParameter, "fractionalization needs d >= 1");
    auto cliques = d_cliques(g, d, vertex_limit());
    GraphBuilder b(cliques.size(), "fractionalization");
    std::vector<VertexSet> perps;
    perps.reserve(cliques.size());
    for (const auto & c : cliques)
        perps.push_back(perp(g, c));
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j)
            if (cliques[j].is_subset_of(perps[i]))
                b.add_edge(i, j);
    return std::move(b).build();
}

/// The d-cliques that label the vertices of fractionalize(g, d), in the same order.
inline auto fractionalize_labels(const Graph & g, std::size_t d) -> std::vector<VertexSet>
{
    return d_cliques(g, d, vertex_limit());
}

/// All flats of g (fixpoints of closure), as the intersection closure of the singleton
/// perps together with V(G). Sorted by size, then lexicographically.
inline auto enumerate_flats(const Graph & g, std::size_t cap) -> std::vector<VertexSet>
{
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> work;
    auto add = [&](VertexSet s) {
        if (seen.insert(s).second) {
            if (seen.size() > cap)
                throw Error(ErrorKind::FlatCountExceeded, "more than " + std::to_string(cap) + " flats");
            work.push_back(std::move(s));
        }
    };
    add(g.vertices());
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t v = 0; v < g.size(); ++v)
            add(work[i] & g.neighbours(v));
    std::vector<VertexSet> flats(seen.begin(), seen.end());
    std::sort(flats.begin(), flats.end(), [](const VertexSet & a, const VertexSet & b) {
        auto ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : VertexSet::lex_less(a, b);
    });
    return flats;
}

} // namespace graphring
