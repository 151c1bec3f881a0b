#pragma once

// Brute-force reference implementations. Deliberately naive and independent of the
// search code under test; only usable on very small graphs.

#include <graphring/graphring.hpp>
#include <graphring/random.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using graphring::Graph;

inline auto adjacency(const Graph & g) -> std::vector<std::vector<bool>>
{
    std::vector<std::vector<bool>> a(g.size(), std::vector<bool>(g.size(), false));
    for (auto [u, v] : g.edges())
        a[u][v] = a[v][u] = true;
    return a;
}

/// Permutation search; g and h must have at most 8 vertices.
inline auto isomorphic(const Graph & g, const Graph & h) -> bool
{
    if (g.size() != h.size() || g.edge_count() != h.edge_count())
        return false;
    if (g.size() > 8)
        throw std::invalid_argument("isomorphism oracle limited to 8 vertices");
    auto a = adjacency(g), b = adjacency(h);
    std::vector<std::size_t> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t u = 0; u < p.size() && ok; ++u)
            for (std::size_t v = u + 1; v < p.size() && ok; ++v)
                ok = a[u][v] == b[p[u]][p[v]];
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Every map V(g) -> V(h) in turn.
inline auto hom_exists(const Graph & g, const Graph & h) -> bool
{
    const auto n = g.size(), m = h.size();
    if (n == 0)
        return true;
    if (m == 0)
        return false;
    auto edges = g.edges();
    std::vector<std::size_t> f(n, 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (! h.adjacent(f[u], f[v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
        std::size_t i = 0;
        while (i < n && ++f[i] == m)
            f[i++] = 0;
        if (i == n)
            return false;
    }
}

inline auto is_clique(const Graph & g, std::uint64_t mask) -> bool
{
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if ((mask >> u & 1) && (mask >> v & 1) && ! g.adjacent(u, v))
                return false;
    return true;
}

inline auto omega(const Graph & g) -> std::size_t
{
    if (g.size() > 20)
        throw std::invalid_argument("clique oracle limited to 20 vertices");
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) > best && is_clique(g, mask))
            best = static_cast<std::size_t>(std::popcount(mask));
    return best;
}

inline auto chi(const Graph & g) -> std::size_t
{
    for (std::size_t k = 0;; ++k)
        if (hom_exists(g, graphring::complete(k)))
            return k;
}

/// Odd cycle closed form: theta(C_n) = n cos(pi/n) / (1 + cos(pi/n)).
inline auto theta_odd_cycle(std::size_t n) -> double
{
    double c = std::cos(std::numbers::pi / static_cast<double>(n));
    return static_cast<double>(n) * c / (1 + c);
}

namespace detail {
    // Solves a square system exactly; nullopt when singular.
    inline auto solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) -> std::optional<std::vector<mpq_class>>
    {
        const auto n = b.size();
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && a[p][c] == 0)
                ++p;
            if (p == n)
                return std::nullopt;
            std::swap(a[p], a[c]);
            std::swap(b[p], b[c]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || a[r][c] == 0)
                    continue;
                mpq_class f = a[r][c] / a[c][c];
                for (std::size_t k = c; k < n; ++k)
                    a[r][k] -= f * a[c][k];
                b[r] -= f * b[c];
            }
        }
        std::vector<mpq_class> x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = b[i] / a[i][i];
        return x;
    }
}

/// Fractional clique number by vertex enumeration of the polytope
/// { y >= 0 : sum_{v in S} y_v <= 1 for every maximal independent S }. By LP duality this
/// equals the fractional chromatic number. Graphs of at most 6 vertices.
inline auto fractional_chromatic(const Graph & g) -> mpq_class
{
    const auto n = g.size();
    if (n == 0)
        return 0;
    if (n > 6)
        throw std::invalid_argument("LP oracle limited to 6 vertices");
    auto comp = graphring::complement(g);
    // constraint rows: maximal independent sets (sum <= 1), then y_v >= 0 as -y_v <= 0
    std::vector<std::vector<mpq_class>> rows;
    std::vector<mpq_class> rhs;
    auto maximal = [&](std::uint64_t mask) {
        for (std::size_t v = 0; v < n; ++v)
            if (! (mask >> v & 1) && is_clique(comp, mask | std::uint64_t{1} << v))
                return false;
        return true;
    };
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        if (is_clique(comp, mask) && maximal(mask)) {
            std::vector<mpq_class> r(n, 0);
            for (std::size_t v = 0; v < n; ++v)
                if (mask >> v & 1)
                    r[v] = 1;
            rows.push_back(r);
            rhs.emplace_back(1);
        }
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<mpq_class> r(n, 0);
        r[v] = -1;
        rows.push_back(r);
        rhs.emplace_back(0);
    }
    mpq_class best = 0;
    // every n-subset of constraints taken as tight
    std::vector<bool> choose(rows.size(), false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(n), true);
    do {
        std::vector<std::vector<mpq_class>> a;
        std::vector<mpq_class> b;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (choose[i]) {
                a.push_back(rows[i]);
                b.push_back(rhs[i]);
            }
        auto y = detail::solve(a, b);
        if (! y)
            continue;
        bool feasible = true;
        for (std::size_t i = 0; i < rows.size() && feasible; ++i) {
            mpq_class lhs = 0;
            for (std::size_t v = 0; v < n; ++v)
                lhs += rows[i][v] * (*y)[v];
            feasible = lhs <= rhs[i];
        }
        if (! feasible)
            continue;
        mpq_class total = 0;
        for (const auto & x : *y)
            total += x;
        best = std::max(best, total);
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return best;
}

/// Canonical form: lexicographically least upper-triangle bit string over all relabellings.
inline auto canonical_code(const Graph & g) -> std::vector<bool>
{
    auto a = adjacency(g);
    std::vector<std::size_t> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> best;
    do {
        std::vector<bool> code;
        for (std::size_t u = 0; u < p.size(); ++u)
            for (std::size_t v = u + 1; v < p.size(); ++v)
                code.push_back(a[p[u]][p[v]]);
        if (best.empty() || code < best)
            best = code;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline auto connected(const Graph & g) -> bool
{
    if (g.size() == 0)
        return false;
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (! stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto v : g.neighbours(u).members())
            if (! seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// All connected graphs on 1..n_max vertices, one per isomorphism class.
inline auto connected_graphs(std::size_t n_max) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<graphring::Edge> pairs;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        std::set<std::vector<bool>> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<graphring::Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1)
                    edges.push_back(pairs[i]);
            auto g = graphring::make_graph(n, edges);
            if (connected(g) && seen.insert(canonical_code(g)).second)
                out.push_back(std::move(g));
        }
    }
    return out;
}

/// Seeded corpus of random graphs with n in [n_min, n_max].
inline auto random_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, std::uint64_t seed) -> std::vector<Graph>
{
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(graphring::random_graph_between(n_min, n_max, rng));
    return out;
}

} // namespace oracle
