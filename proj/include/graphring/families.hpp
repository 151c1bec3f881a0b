#pragma once

#include <graphring/fraclp.hpp>
#include <graphring/gf.hpp>
#include <graphring/hom.hpp>
#include <graphring/ops.hpp>
#include <graphring/rational.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace graphring {

enum class FamilyKind { Complete, Haemers };

/// A semiring family generator: Complete gives F_n = K_n; Haemers(q) gives the graph of
/// vector pairs (x, y) in GF(q)^n x GF(q)^n with <x,y> = 1.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Complete;
    unsigned q = 0;

    static auto complete_family() -> FamilySpec { return {FamilyKind::Complete, 0}; }
    static auto haemers(unsigned q) -> FamilySpec
    {
        GaloisField check(q);
        return {FamilyKind::Haemers, q};
    }

    /// "complete", "haemers:2", "haemers:3" or "haemers:4".
    static auto parse(const std::string & text) -> FamilySpec
    {
        if (text == "complete")
            return complete_family();
        if (text.rfind("haemers:", 0) == 0) {
            auto rest = text.substr(8);
            if (rest == "2" || rest == "3" || rest == "4")
                return haemers(static_cast<unsigned>(rest[0] - '0'));
        }
        throw Error(ErrorKind::Parse, "unknown family '" + text + "' (expected complete or haemers:2|3|4)");
    }

    [[nodiscard]] auto to_string() const -> std::string
    {
        return kind == FamilyKind::Complete ? "complete" : "haemers:" + std::to_string(q);
    }

    friend auto operator<=>(const FamilySpec &, const FamilySpec &) = default;
};

/// Haemers family graphs are only generated while q^(2n) stays within this many candidates.
inline constexpr std::size_t haemers_candidate_cap = 256;

namespace detail {
    inline auto build_haemers(unsigned q, std::size_t n) -> Graph
    {
        GaloisField f(q);
        const auto space = f.space_size(n);
        if (space * space > haemers_candidate_cap)
            throw Error(ErrorKind::SizeCap, "Haemers family over GF(" + std::to_string(q) + ") at n = " + std::to_string(n) +
                    " has " + std::to_string(space * space) + " candidate pairs (limit " + std::to_string(haemers_candidate_cap) + ")");
        std::vector<std::vector<std::uint8_t>> xs, ys;
        for (std::size_t a = 0; a < space; ++a)
            for (std::size_t b = 0; b < space; ++b) {
                auto x = f.decode(a, n), y = f.decode(b, n);
                if (f.dot(x, y) == 1) {
                    xs.push_back(std::move(x));
                    ys.push_back(std::move(y));
                }
            }
        GraphBuilder builder(xs.size(), "Haemers family graph");
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                if (f.dot(xs[i], ys[j]) == 0 && f.dot(xs[j], ys[i]) == 0)
                    builder.add_edge(i, j);
        return std::move(builder).build();
    }

    class FamilyCache {
    public:
        auto get(const FamilySpec & spec, std::size_t n) -> const Graph &
        {
            auto key = std::make_tuple(static_cast<int>(spec.kind), spec.q, n);
            {
                std::shared_lock read(_mutex);
                if (auto it = _graphs.find(key); it != _graphs.end())
                    return it->second;
            }
            Graph g = spec.kind == FamilyKind::Complete ? complete(n) : build_haemers(spec.q, n);
            std::unique_lock write(_mutex);
            return _graphs.try_emplace(key, std::move(g)).first->second;
        }

    private:
        std::shared_mutex _mutex;
        std::map<std::tuple<int, unsigned, std::size_t>, Graph> _graphs;
    };

    inline auto family_cache() -> FamilyCache &
    {
        static FamilyCache cache;
        return cache;
    }
}

/// F_n of the family. References stay valid for the life of the process.
inline auto family_graph(const FamilySpec & spec, std::size_t n) -> const Graph &
{
    return detail::family_cache().get(spec, n);
}

/// The (x, y) pairs labelling the vertices of the Haemers graph F_n, in vertex order.
inline auto haemers_labels(unsigned q, std::size_t n)
    -> std::vector<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>>
{
    GaloisField f(q);
    std::vector<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>> out;
    const auto space = f.space_size(n);
    for (std::size_t a = 0; a < space; ++a)
        for (std::size_t b = 0; b < space; ++b) {
            auto x = f.decode(a, n), y = f.decode(b, n);
            if (f.dot(x, y) == 1)
                out.emplace_back(std::move(x), std::move(y));
        }
    return out;
}

struct FamilyCheckEntry {
    std::string operation; // "join" or "disjunctive"
    std::size_t n = 0, m = 0;
    Answer answer = Answer::No;
};

struct FamilyCheckReport {
    std::vector<FamilyCheckEntry> entries;

    [[nodiscard]] auto ok() const -> bool
    {
        for (const auto & e : entries)
            if (e.answer != Answer::Yes)
                return false;
        return true;
    }
};

/// Checks F_n + F_m -> F_{n+m} and F_n * F_m -> F_{nm} for all n, m <= n_max.
inline auto check_semiring_family(const FamilySpec & spec, std::size_t n_max, const SearchConfig & cfg = {})
    -> FamilyCheckReport
{
    FamilyCheckReport report;
    for (std::size_t n = 0; n <= n_max; ++n)
        for (std::size_t m = 0; m <= n_max; ++m) {
            const auto & fn = family_graph(spec, n);
            const auto & fm = family_graph(spec, m);
            report.entries.push_back({"join", n, m, exists_hom(join(fn, fm), family_graph(spec, n + m), cfg).answer});
            report.entries.push_back(
                {"disjunctive", n, m, exists_hom(disjunctive(fn, fm), family_graph(spec, n * m), cfg).answer});
        }
    return report;
}

struct FlatCheck {
    VertexSet flat;
    std::size_t rank = 0;
    Answer answer = Answer::No;
};

struct LinearLikeReport {
    std::size_t n = 0;
    std::size_t omega = 0;
    std::vector<FlatCheck> flats;

    [[nodiscard]] auto omega_ok() const -> bool { return omega == n; }
    [[nodiscard]] auto ok() const -> bool
    {
        if (! omega_ok())
            return false;
        for (const auto & f : flats)
            if (f.answer != Answer::Yes)
                return false;
        return true;
    }
};

/// For every flat S of F_n, checks that the induced subgraph is homomorphically
/// equivalent to F_rank(S); also records omega(F_n).
inline auto check_linear_like(const FamilySpec & spec, std::size_t n, std::size_t flat_cap, const SearchConfig & cfg = {})
    -> LinearLikeReport
{
    const auto & fn = family_graph(spec, n);
    LinearLikeReport report;
    report.n = n;
    report.omega = omega(fn);
    for (auto & s : enumerate_flats(fn, flat_cap)) {
        auto r = rank(fn, s);
        auto answer = hom_equivalent(induced_subgraph(fn, s), family_graph(spec, r), cfg);
        report.flats.push_back({std::move(s), r, answer});
    }
    return report;
}

struct FNumberResult {
    std::size_t value = 0;
    HomWitness witness;
};

/// Smallest n <= n_max with g -> F_n, or nullopt if none (ExceedsBound).
/// The climb starts at omega(g), a valid floor because omega(F_n) = n for both families.
inline auto f_number(const FamilySpec & spec, const Graph & g, std::size_t n_max, const SearchConfig & cfg = {})
    -> std::optional<FNumberResult>
{
    if (g.size() == 0)
        return FNumberResult{0, HomWitness{}};
    for (std::size_t n = omega(g); n <= n_max; ++n) {
        auto r = exists_hom(g, family_graph(spec, n), cfg);
        if (r.yes())
            return FNumberResult{n, *r.witness};
        if (r.answer == Answer::BudgetExceeded)
            throw Error(ErrorKind::BudgetExceeded, "deciding G -> F_" + std::to_string(n) + " for " + spec.to_string());
    }
    return std::nullopt;
}

struct FractionalFNumber {
    /// min n/d over the searched grid; nullopt when no grid point admits a homomorphism.
    std::optional<Rational> upper;
    std::size_t n = 0, d = 0;
    HomWitness witness;
    /// Trivial lower bound omega(g).
    std::size_t omega_lower = 0;
};

/// Upper bound on the fractional F-number from the grid n <= n_max, d <= d_max:
/// min n/d with g -> F_n / d. For each d, n climbs from d*omega(g).
inline auto f_number_fractional(const FamilySpec & spec, const Graph & g, std::size_t n_max, std::size_t d_max,
    const SearchConfig & cfg = {}) -> FractionalFNumber
{
    if (d_max == 0)
        throw Error(ErrorKind::InvalidParameter, "d_max must be at least 1");
    FractionalFNumber result;
    result.omega_lower = omega(g);
    if (g.size() == 0) {
        result.upper = Rational(0);
        result.d = 1;
        return result;
    }
    for (std::size_t d = 1; d <= d_max; ++d)
        for (std::size_t n = d * result.omega_lower; n <= n_max; ++n) {
            Rational ratio(static_cast<long>(n), static_cast<long>(d));
            if (result.upper && ratio >= *result.upper)
                break;
            auto target = fractionalize(family_graph(spec, n), d);
            auto r = exists_hom(g, target, cfg);
            if (r.answer == Answer::BudgetExceeded)
                throw Error(ErrorKind::BudgetExceeded,
                    "deciding G -> F_" + std::to_string(n) + "/" + std::to_string(d) + " for " + spec.to_string());
            if (r.yes()) {
                result.upper = ratio;
                result.n = n;
                result.d = d;
                result.witness = *r.witness;
                break;
            }
        }
    return result;
}

struct AsymptoticFNumber {
    /// min over k <= power_max of f_number(g^{*k})^(1/k); nullopt if no power was decided within n_max.
    std::optional<double> upper;
    std::size_t power = 0;
    std::size_t f_value = 0;
};

inline auto f_number_asymptotic(const FamilySpec & spec, const Graph & g, std::size_t power_max, std::size_t n_max,
    const SearchConfig & cfg = {}) -> AsymptoticFNumber
{
    AsymptoticFNumber result;
    for (std::size_t k = 1; k <= power_max; ++k) {
        auto f = f_number(spec, disjunctive_power(g, k), n_max, cfg);
        if (! f)
            continue;
        double v = std::pow(static_cast<double>(f->value), 1.0 / static_cast<double>(k));
        if (! result.upper || v < *result.upper - 1e-12) {
            result.upper = v;
            result.power = k;
            result.f_value = f->value;
        }
    }
    return result;
}

inline constexpr std::size_t minrank_max_vertices = 8;
inline constexpr std::size_t minrank_max_rank = 4;

struct MinrankResult {
    std::size_t rank = 0;
    /// x[v], y[v] in GF(q)^rank with <x_v,y_v> = 1 and <x_u,y_v> = <x_v,y_u> = 0 for u ~ v.
    std::vector<std::vector<std::uint8_t>> x, y;
};

namespace detail {
    class MinrankSearch {
    public:
        MinrankSearch(const Graph & g, const GaloisField & f, std::size_t r) : _g(g), _f(f), _r(r)
        {
            const auto space = f.space_size(r);
            for (std::size_t a = 0; a < space; ++a)
                for (std::size_t b = 0; b < space; ++b) {
                    auto x = f.decode(a, r), y = f.decode(b, r);
                    if (f.dot(x, y) == 1)
                        _pairs.emplace_back(std::move(x), std::move(y));
                }
        }

        auto run() -> std::optional<MinrankResult>
        {
            const auto n = _g.size();
            _x.assign(n, {});
            _y.assign(n, {});
            _placed.assign(n, false);
            // a maximum clique can be moved to the standard basis by a change of basis that
            // preserves the pairing, so fix it there
            auto clique = max_clique(_g);
            if (clique.size() > _r)
                return std::nullopt;
            for (std::size_t i = 0; i < clique.size(); ++i) {
                std::vector<std::uint8_t> e(_r, 0);
                e[i] = 1;
                _x[clique[i]] = e;
                _y[clique[i]] = e;
                _placed[clique[i]] = true;
            }
            std::vector<std::size_t> order;
            std::vector<bool> ordered = _placed;
            for (std::size_t step = clique.size(); step < n; ++step) {
                std::size_t best = n, best_links = 0, best_deg = 0;
                for (std::size_t v = 0; v < n; ++v) {
                    if (ordered[v])
                        continue;
                    std::size_t links = 0;
                    _g.neighbours(v).for_each([&](std::size_t u) { links += ordered[u] ? 1 : 0; });
                    if (best == n || links > best_links || (links == best_links && _g.degree(v) > best_deg)) {
                        best = v;
                        best_links = links;
                        best_deg = _g.degree(v);
                    }
                }
                ordered[best] = true;
                order.push_back(best);
            }
            if (! place(order, 0))
                return std::nullopt;
            return MinrankResult{_r, _x, _y};
        }

    private:
        auto place(const std::vector<std::size_t> & order, std::size_t i) -> bool
        {
            if (i == order.size())
                return true;
            const auto v = order[i];
            for (const auto & [x, y] : _pairs) {
                bool ok = true;
                _g.neighbours(v).for_each([&](std::size_t u) {
                    if (ok && _placed[u])
                        ok = _f.dot(_x[u], y) == 0 && _f.dot(x, _y[u]) == 0;
                });
                if (! ok)
                    continue;
                _x[v] = x;
                _y[v] = y;
                _placed[v] = true;
                if (place(order, i + 1))
                    return true;
                _placed[v] = false;
            }
            return false;
        }

        const Graph & _g;
        const GaloisField & _f;
        std::size_t _r;
        std::vector<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>> _pairs;
        std::vector<std::vector<std::uint8_t>> _x, _y;
        std::vector<bool> _placed;
    };
}

/// Smallest r <= r_max admitting vectors x_v, y_v in GF(q)^r with <x_v,y_v> = 1 and
/// <x_u,y_v> = <x_v,y_u> = 0 on edges; equivalently the least rank of a matrix with unit
/// diagonal vanishing on the edges of g. nullopt means ExceedsBound. Exhaustive within bounds.
inline auto minrank(const Graph & g, unsigned q, std::size_t r_max) -> std::optional<MinrankResult>
{
    if (g.size() > minrank_max_vertices)
        throw Error(ErrorKind::SizeCap, "minrank needs at most " + std::to_string(minrank_max_vertices) + " vertices");
    if (r_max > minrank_max_rank)
        throw Error(ErrorKind::SizeCap, "minrank searches ranks up to " + std::to_string(minrank_max_rank));
    GaloisField f(q);
    if (g.size() == 0)
        return MinrankResult{};
    for (std::size_t r = std::max<std::size_t>(1, omega(g)); r <= r_max; ++r)
        if (auto found = detail::MinrankSearch(g, f, r).run())
            return found;
    return std::nullopt;
}

/// phi(v) is a vertex set of F_m; r the claimed rank.
struct RankRRepresentation {
    std::vector<VertexSet> assignment;
    std::size_t r = 0;
};

/// Checks that rep maps edges of g to power-graph adjacencies of fm and that every image
/// has rank >= r. Returns rank(union of images) / r. Throws InvalidRepresentation.
inline auto verify_rank_representation(const RankRRepresentation & rep, const Graph & g, const Graph & fm) -> Rational
{
    if (rep.assignment.size() != g.size())
        throw Error(ErrorKind::InvalidRepresentation, "assignment does not cover every vertex");
    if (rep.r == 0)
        throw Error(ErrorKind::InvalidRepresentation, "rank must be positive");
    for (const auto & s : rep.assignment)
        if (s.universe() != fm.size())
            throw Error(ErrorKind::InvalidRepresentation, "image is not a vertex set of the target");
    for (auto [u, v] : g.edges())
        if (! power_adjacent(fm, rep.assignment[u], rep.assignment[v]))
            throw Error(ErrorKind::InvalidRepresentation, "adjacency: edge " + std::to_string(u) + "-" + std::to_string(v) +
                    " is not mapped to adjacent sets");
    VertexSet all(fm.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (rank(fm, rep.assignment[v]) < rep.r)
            throw Error(ErrorKind::InvalidRepresentation, "rank: image of vertex " + std::to_string(v) + " has rank below " +
                    std::to_string(rep.r));
        all |= rep.assignment[v];
    }
    return Rational(static_cast<long>(rank(fm, all)), static_cast<long>(rep.r));
}

/// The rank-d representation induced by a homomorphism g -> F_n / d: each vertex goes to its d-clique.
inline auto canonical_representation(const Graph & fn, std::size_t d, const HomWitness & into_fraction) -> RankRRepresentation
{
    auto labels = fractionalize_labels(fn, d);
    RankRRepresentation rep;
    rep.r = d;
    for (auto t : into_fraction.map)
        rep.assignment.push_back(labels.at(t));
    return rep;
}

} // namespace graphring
