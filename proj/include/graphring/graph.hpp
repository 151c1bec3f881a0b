#pragma once

#include <graphring/error.hpp>
#include <graphring/vertex_set.hpp>

#include <atomic>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace graphring {

namespace detail {
    inline auto vertex_limit_storage() -> std::atomic<std::size_t> &
    {
        static std::atomic<std::size_t> limit{4096};
        return limit;
    }
}

/// Hard cap on the vertex count of any constructed graph.
inline auto vertex_limit() -> std::size_t { return detail::vertex_limit_storage().load(); }
inline void set_vertex_limit(std::size_t limit) { detail::vertex_limit_storage().store(limit); }

inline void check_vertex_count(std::size_t n, const char * what)
{
    if (n > vertex_limit())
        throw Error(ErrorKind::SizeCap, std::string(what) + " would have " + std::to_string(n) +
                " vertices, above the limit of " + std::to_string(vertex_limit()));
}

/// Checked multiplication for vertex counts of products.
inline auto checked_product_size(std::size_t a, std::size_t b, const char * what) -> std::size_t
{
    if (a != 0 && b > vertex_limit() / a + 1)
        check_vertex_count(vertex_limit() + 1, what);
    check_vertex_count(a * b, what);
    return a * b;
}

using Edge = std::pair<std::size_t, std::size_t>;

class GraphBuilder;

/// Finite simple undirected graph with bitset adjacency rows. Immutable once built.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return _adj.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return _adj.empty(); }

    [[nodiscard]] auto adjacent(std::size_t u, std::size_t v) const -> bool { return _adj[u].test(v); }
    [[nodiscard]] auto neighbours(std::size_t v) const -> const VertexSet & { return _adj[v]; }
    [[nodiscard]] auto degree(std::size_t v) const -> std::size_t { return _adj[v].count(); }
    [[nodiscard]] auto rows() const noexcept -> const std::vector<VertexSet> & { return _adj; }

    [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::full(size()); }

    [[nodiscard]] auto edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (const auto & r : _adj)
            twice += r.count();
        return twice / 2;
    }

    /// Edges (u, v) with u < v, in row-major order.
    [[nodiscard]] auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (std::size_t u = 0; u < size(); ++u)
            _adj[u].for_each([&](std::size_t v) {
                if (u < v)
                    out.emplace_back(u, v);
            });
        return out;
    }

    [[nodiscard]] auto is_complete() const -> bool
    {
        for (const auto & r : _adj)
            if (r.count() + 1 != size())
                return false;
        return true;
    }

    /// Symmetric with zero diagonal; holds for every value produced by this library.
    [[nodiscard]] auto well_formed() const -> bool
    {
        for (std::size_t u = 0; u < size(); ++u) {
            if (_adj[u].universe() != size() || _adj[u].test(u))
                return false;
            bool ok = true;
            _adj[u].for_each([&](std::size_t v) { ok = ok && _adj[v].test(u); });
            if (! ok)
                return false;
        }
        return true;
    }

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    friend class GraphBuilder;
    explicit Graph(std::vector<VertexSet> adj) : _adj(std::move(adj)) {}

    std::vector<VertexSet> _adj;
};

/// Mutable staging area for a Graph; callers are trusted to keep endpoints in range.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n, const char * what = "graph")
    {
        check_vertex_count(n, what);
        _adj.assign(n, VertexSet(n));
    }

    void add_edge(std::size_t u, std::size_t v)
    {
        _adj[u].set(v);
        _adj[v].set(u);
    }

    /// Sets row u wholesale; the caller must keep the result symmetric.
    void set_row(std::size_t u, VertexSet row) { _adj[u] = std::move(row); }

    [[nodiscard]] auto size() const noexcept -> std::size_t { return _adj.size(); }

    [[nodiscard]] auto build() && -> Graph { return Graph(std::move(_adj)); }

private:
    std::vector<VertexSet> _adj;
};

inline auto make_graph(std::size_t n, const std::vector<Edge> & edges) -> Graph
{
    GraphBuilder b(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw Error(ErrorKind::IndexOutOfRange,
                "edge " + std::to_string(u) + "-" + std::to_string(v) + " in a graph on " + std::to_string(n) + " vertices");
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(u));
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

inline auto complete(std::size_t n) -> Graph
{
    GraphBuilder b(n, "complete graph");
    for (std::size_t u = 0; u < n; ++u) {
        auto row = VertexSet::full(n);
        row.reset(u);
        b.set_row(u, std::move(row));
    }
    return std::move(b).build();
}

inline auto edgeless(std::size_t n) -> Graph { return std::move(GraphBuilder(n, "edgeless graph")).build(); }

inline auto cycle(std::size_t n) -> Graph
{
    if (n < 3)
        throw Error(ErrorKind::InvalidParameter, "cycle needs at least 3 vertices, got " + std::to_string(n));
    GraphBuilder b(n, "cycle");
    for (std::size_t v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

inline auto binomial(std::size_t n, std::size_t k) -> std::size_t
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (std::size_t{1} << 40))
            return r;
    }
    return r;
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline auto k_subsets(std::size_t n, std::size_t k) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    if (k > n)
        return out;
    while (true) {
        VertexSet s(n);
        for (auto i : idx)
            s.set(i);
        out.push_back(std::move(s));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/// Kneser graph KG(n,k): k-subsets in lexicographic order, adjacent when disjoint.
inline auto kneser(std::size_t n, std::size_t k) -> Graph
{
    if (k > n)
        throw Error(ErrorKind::InvalidParameter, "kneser(" + std::to_string(n) + "," + std::to_string(k) + ") needs k <= n");
    check_vertex_count(binomial(n, k), "Kneser graph");
    auto subsets = k_subsets(n, k);
    GraphBuilder b(subsets.size(), "Kneser graph");
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if (! subsets[i].intersects(subsets[j]))
                b.add_edge(i, j);
    return std::move(b).build();
}

inline auto petersen() -> Graph { return kneser(5, 2); }

inline auto complement(const Graph & g) -> Graph
{
    GraphBuilder b(g.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
        auto row = g.neighbours(u).complement();
        row.reset(u);
        b.set_row(u, std::move(row));
    }
    return std::move(b).build();
}

/// Induced subgraph on s, relabelled 0..|s|-1 in increasing original order.
inline auto induced_subgraph(const Graph & g, const VertexSet & s) -> Graph
{
    if (s.universe() != g.size())
        throw Error(ErrorKind::InvalidSet, "vertex set over " + std::to_string(s.universe()) +
                " vertices used with a graph on " + std::to_string(g.size()));
    auto keep = s.members();
    GraphBuilder b(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                b.add_edge(i, j);
    return std::move(b).build();
}

/// Reads the edge-list format: first line n, then one "u v" pair per line with u < v.
/// '#' starts a comment; blank lines are ignored; duplicates are rejected.
inline auto read_edge_list(std::istream & in) -> Graph
{
    std::string line;
    std::size_t line_no = 0;
    bool have_n = false;
    std::size_t n = 0;
    std::set<Edge> seen;
    std::vector<Edge> edges;
    auto fail = [&](const std::string & msg) { throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg); };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        long long a = 0, b = 0;
        if (! have_n) {
            if (! (ls >> a)) {
                std::string rest;
                if (ls.clear(), ls >> rest)
                    fail("expected vertex count");
                continue;
            }
            if (a < 0)
                fail("negative vertex count");
            n = static_cast<std::size_t>(a);
            check_vertex_count(n, "edge-list graph");
            have_n = true;
        }
        else {
            if (! (ls >> a)) {
                std::string rest;
                if (ls.clear(), ls >> rest)
                    fail("expected an edge");
                continue;
            }
            if (! (ls >> b))
                fail("edge needs two endpoints");
            if (a < 0 || b < 0 || static_cast<std::size_t>(b) >= n || a >= b)
                fail("edge must satisfy 0 <= u < v < n");
            Edge e{static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
            if (! seen.insert(e).second)
                fail("duplicate edge");
            edges.push_back(e);
        }
        std::string extra;
        if (ls >> extra)
            fail("trailing text '" + extra + "'");
    }
    if (! have_n)
        throw Error(ErrorKind::Parse, "missing vertex count");
    return make_graph(n, edges);
}

inline auto read_edge_list_file(const std::string & path) -> Graph
{
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorKind::Io, "cannot open " + path);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream & out, const Graph & g)
{
    out << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

} // namespace graphring
