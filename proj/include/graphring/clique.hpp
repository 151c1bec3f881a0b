#pragma once

#include <graphring/graph.hpp>

#include <algorithm>
#include <cstddef>
#include <vector>

namespace graphring {

namespace detail {
    // Branch and bound maximum clique with a greedy colouring bound, after Tomita's MCQ.
    class MaxCliqueSearch {
    public:
        explicit MaxCliqueSearch(const Graph & g) : _g(g) {}

        auto run(const VertexSet & candidates) -> std::vector<std::size_t>
        {
            _best.clear();
            _current.clear();
            expand(candidates);
            return _best;
        }

    private:
        void colour_order(const VertexSet & p, std::vector<std::size_t> & order, std::vector<std::size_t> & bounds) const
        {
            VertexSet uncoloured = p;
            std::size_t colour = 0;
            while (uncoloured.any()) {
                ++colour;
                VertexSet q = uncoloured;
                while (q.any()) {
                    auto v = q.first();
                    q.reset(v);
                    q -= _g.neighbours(v);
                    uncoloured.reset(v);
                    order.push_back(v);
                    bounds.push_back(colour);
                }
            }
        }

        void expand(VertexSet p)
        {
            std::vector<std::size_t> order, bounds;
            colour_order(p, order, bounds);
            for (std::size_t i = order.size(); i-- > 0;) {
                if (_current.size() + bounds[i] <= _best.size())
                    return;
                auto v = order[i];
                _current.push_back(v);
                auto next = p & _g.neighbours(v);
                if (next.empty()) {
                    if (_current.size() > _best.size())
                        _best = _current;
                }
                else
                    expand(std::move(next));
                _current.pop_back();
                p.reset(v);
            }
        }

        const Graph & _g;
        std::vector<std::size_t> _best, _current;
    };
}

/// A maximum clique of g restricted to `within`, as sorted vertex indices.
inline auto max_clique(const Graph & g, const VertexSet & within) -> std::vector<std::size_t>
{
    auto c = detail::MaxCliqueSearch(g).run(within);
    std::sort(c.begin(), c.end());
    return c;
}

inline auto max_clique(const Graph & g) -> std::vector<std::size_t> { return max_clique(g, g.vertices()); }

/// Clique number; omega of the empty graph is 0.
inline auto omega(const Graph & g) -> std::size_t { return max_clique(g).size(); }

inline auto omega_within(const Graph & g, const VertexSet & within) -> std::size_t { return max_clique(g, within).size(); }

/// Independence number, computed as the clique number of the complement.
inline auto alpha(const Graph & g) -> std::size_t { return omega(complement(g)); }

/// All d-cliques of g in lexicographic order of their sorted vertex lists.
/// Throws SizeCap once more than `limit` cliques are found.
inline auto d_cliques(const Graph & g, std::size_t d, std::size_t limit) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    if (d == 0) {
        out.emplace_back(g.size());
        return out;
    }
    VertexSet current(g.size());
    auto rec = [&](auto & self, const VertexSet & candidates, std::size_t remaining) -> void {
        if (remaining == 0) {
            if (out.size() == limit)
                throw Error(ErrorKind::SizeCap, "more than " + std::to_string(limit) + " " + std::to_string(d) + "-cliques");
            out.push_back(current);
            return;
        }
        if (candidates.count() < remaining)
            return;
        for (auto v = candidates.first(); v != VertexSet::npos; v = candidates.next(v + 1)) {
            VertexSet later = candidates & g.neighbours(v);
            // only extend with larger indices so each clique is produced once, in lex order
            for (auto u = later.first(); u != VertexSet::npos && u < v; u = later.next(u + 1))
                later.reset(u);
            current.set(v);
            self(self, later, remaining - 1);
            current.reset(v);
        }
    };
    rec(rec, g.vertices(), d);
    return out;
}

/// Degree-of-saturation greedy colouring; returns a colour per vertex (0-based).
inline auto dsatur_colouring(const Graph & g) -> std::vector<std::size_t>
{
    const auto n = g.size();
    std::vector<std::size_t> colour(n, VertexSet::npos);
    std::vector<VertexSet> seen(n, VertexSet(n + 1));
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = VertexSet::npos, best_sat = 0, best_deg = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (colour[v] != VertexSet::npos)
                continue;
            auto sat = seen[v].count(), deg = g.degree(v);
            if (best == VertexSet::npos || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        auto free = seen[best].complement().first();
        colour[best] = free;
        g.neighbours(best).for_each([&](std::size_t u) { seen[u].set(free); });
    }
    return colour;
}

} // namespace graphring
