#pragma once

#include <graphring/hom.hpp>
#include <graphring/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace graphring {

inline constexpr std::size_t lp_max_vertices = 25;

/// Inclusion-maximal independent sets, via Bron–Kerbosch with Tomita pivoting on the
/// complement. Sorted lexicographically.
inline auto maximal_independent_sets(const Graph & g, std::size_t cap = lp_max_vertices) -> std::vector<VertexSet>
{
    if (g.size() > cap)
        throw Error(ErrorKind::SizeCap, "independent-set enumeration on " + std::to_string(g.size()) +
                " vertices (limit " + std::to_string(cap) + ")");
    std::vector<VertexSet> out;
    if (g.size() == 0)
        return out;
    const auto h = complement(g);
    VertexSet r(g.size());
    auto rec = [&](auto & self, VertexSet p, VertexSet x) -> void {
        if (p.empty()) {
            if (x.empty())
                out.push_back(r);
            return;
        }
        auto px = p | x;
        std::size_t pivot = px.first(), best = 0;
        px.for_each([&](std::size_t u) {
            auto c = p.intersection_count(h.neighbours(u));
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        auto branch = p - h.neighbours(pivot);
        branch.for_each([&](std::size_t v) {
            r.set(v);
            self(self, p & h.neighbours(v), x & h.neighbours(v));
            r.reset(v);
            p.reset(v);
            x.set(v);
        });
    };
    rec(rec, g.vertices(), VertexSet(g.size()));
    std::sort(out.begin(), out.end(), VertexSet::lex_less);
    return out;
}

struct FractionalChromaticResult {
    Rational value;
    /// Optimal fractional colouring: weight per maximal independent set, nonzero entries only.
    std::vector<std::pair<VertexSet, Rational>> weights;
};

namespace detail {
    // Exact simplex on the packing LP max 1'y s.t. A y <= 1, y >= 0 (rows of A are the
    // independent sets) in a condensed tableau. Entering and leaving variables follow
    // Bland's smallest-label rule, which rules out cycling. The covering LP optimum is read
    // off the final reduced costs of the slacks.
    class PackingSimplex {
    public:
        PackingSimplex(std::size_t n, const std::vector<VertexSet> & rows) :
            _n(n), _m(rows.size()), _a(_m, std::vector<mpq_class>(n)), _b(_m, 1), _c(n, 1), _value(0)
        {
            for (std::size_t i = 0; i < _m; ++i)
                rows[i].for_each([&](std::size_t v) { _a[i][v] = 1; });
            for (std::size_t j = 0; j < n; ++j)
                _nonbasic.push_back(j);
            for (std::size_t i = 0; i < _m; ++i)
                _basic.push_back(n + i);
        }

        void solve()
        {
            while (true) {
                std::size_t s = npos;
                for (std::size_t j = 0; j < _n; ++j)
                    if (sgn(_c[j]) > 0 && (s == npos || _nonbasic[j] < _nonbasic[s]))
                        s = j;
                if (s == npos)
                    return;
                std::size_t r = npos;
                mpq_class best_ratio;
                for (std::size_t i = 0; i < _m; ++i) {
                    if (sgn(_a[i][s]) <= 0)
                        continue;
                    mpq_class ratio = _b[i] / _a[i][s];
                    if (r == npos || ratio < best_ratio || (ratio == best_ratio && _basic[i] < _basic[r])) {
                        r = i;
                        best_ratio = ratio;
                    }
                }
                if (r == npos)
                    throw std::logic_error("packing LP unbounded; every vertex must lie in some independent set");
                pivot(r, s);
            }
        }

        [[nodiscard]] auto value() const -> const mpq_class & { return _value; }

        /// Covering weight of row i (the dual value of its constraint).
        [[nodiscard]] auto row_dual(std::size_t i) const -> mpq_class
        {
            for (std::size_t j = 0; j < _n; ++j)
                if (_nonbasic[j] == _n + i)
                    return -_c[j];
            return 0;
        }

    private:
        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        void pivot(std::size_t r, std::size_t s)
        {
            const mpq_class p = _a[r][s];
            for (std::size_t j = 0; j < _n; ++j)
                if (j != s)
                    _a[r][j] /= p;
            _b[r] /= p;
            _a[r][s] = 1 / p;
            for (std::size_t i = 0; i < _m; ++i) {
                if (i == r || sgn(_a[i][s]) == 0)
                    continue;
                const mpq_class f = _a[i][s];
                for (std::size_t j = 0; j < _n; ++j)
                    if (j != s && sgn(_a[r][j]) != 0)
                        _a[i][j] -= f * _a[r][j];
                _b[i] -= f * _b[r];
                _a[i][s] = -f / p;
            }
            const mpq_class cs = _c[s];
            for (std::size_t j = 0; j < _n; ++j)
                if (j != s)
                    _c[j] -= cs * _a[r][j];
            _value += cs * _b[r];
            _c[s] = -cs / p;
            std::swap(_basic[r], _nonbasic[s]);
        }

        std::size_t _n, _m;
        std::vector<std::vector<mpq_class>> _a;
        std::vector<mpq_class> _b, _c;
        mpq_class _value;
        std::vector<std::size_t> _basic, _nonbasic;
    };
}

/// Exact fractional chromatic number: the covering LP over maximal independent sets.
inline auto fractional_chromatic_solution(const Graph & g) -> FractionalChromaticResult
{
    FractionalChromaticResult result;
    if (g.size() == 0)
        return result;
    auto sets = maximal_independent_sets(g);
    detail::PackingSimplex lp(g.size(), sets);
    lp.solve();
    result.value = Rational(lp.value());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto w = lp.row_dual(i);
        if (sgn(w) != 0)
            result.weights.emplace_back(sets[i], Rational(w));
    }
    return result;
}

inline auto fractional_chromatic(const Graph & g) -> Rational { return fractional_chromatic_solution(g).value; }

struct KneserBound {
    Rational value;
    std::size_t n = 0, d = 0;
    HomWitness witness;
};

/// Smallest n/d over the grid with g -> KG(n,d). nullopt if no grid point admits a
/// homomorphism. Throws BudgetExceeded if a grid point cannot be decided.
inline auto chif_upper_via_kneser(const Graph & g, std::size_t n_max, std::size_t d_max, const SearchConfig & cfg = {})
    -> std::optional<KneserBound>
{
    if (n_max == 0 || d_max == 0)
        throw Error(ErrorKind::InvalidParameter, "grid bounds must be at least 1");
    if (g.size() == 0)
        return KneserBound{Rational(0), 0, 1, HomWitness{}};
    std::optional<KneserBound> best;
    const auto w = omega(g);
    for (std::size_t d = 1; d <= d_max; ++d) {
        // omega(KG(n,d)) = floor(n/d), so n >= d*omega(g) is necessary
        for (std::size_t n = std::max(d * w, d); n <= n_max; ++n) {
            Rational ratio(static_cast<long>(n), static_cast<long>(d));
            if (best && ratio >= best->value)
                break;
            auto r = exists_hom(g, kneser(n, d), cfg);
            if (r.answer == Answer::BudgetExceeded)
                throw Error(ErrorKind::BudgetExceeded, "deciding G -> KG(" + std::to_string(n) + "," + std::to_string(d) + ")");
            if (r.yes()) {
                best = KneserBound{ratio, n, d, *r.witness};
                break;
            }
        }
    }
    return best;
}

} // namespace graphring
