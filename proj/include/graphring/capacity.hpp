#pragma once

#include <graphring/families.hpp>
#include <graphring/fraclp.hpp>
#include <graphring/hom.hpp>
#include <graphring/ops.hpp>
#include <graphring/theta.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace graphring {

struct BoundSide {
    double value = 0;
    std::string certificate;
};

/// Two-sided bound; lower <= upper + 1e-6 always holds.
struct BoundInterval {
    BoundSide lower;
    BoundSide upper;
};

/// One semiring-homomorphic invariant tried as an upper bound.
struct InvariantBound {
    std::string name;
    std::optional<double> value;
    std::string note;
};

struct UpperBoundReport {
    BoundSide best;
    std::vector<InvariantBound> candidates;
};

struct CapacityOptions {
    std::size_t power_max = 2;
    ThetaOptions theta;
    /// Haemers fields whose fractional F-number grid is tried as an upper bound.
    std::vector<unsigned> haemers_fields{2};
    std::size_t haemers_n_max = 3;
    std::size_t haemers_d_max = 2;
    /// Grid for the rate lower bound.
    std::size_t m_max = 2;
    std::size_t n_max = 2;
};

namespace detail {
    // Smallest double >= the exact rational.
    inline auto round_up(const Rational & r) -> double
    {
        double v = r.to_double();
        if (cmp(mpq_class(v), r.raw()) < 0)
            v = std::nextafter(v, std::numeric_limits<double>::infinity());
        return v;
    }

    inline auto round_down(const Rational & r) -> double
    {
        double v = r.to_double();
        if (cmp(mpq_class(v), r.raw()) > 0)
            v = std::nextafter(v, -std::numeric_limits<double>::infinity());
        return v;
    }

    inline auto format(double v) -> std::string
    {
        std::ostringstream os;
        os.precision(7);
        os << v;
        return os.str();
    }
}

/// max over k <= power_max of omega(G^{*k})^(1/k), with the achieving clique as certificate.
inline auto shannon_lower(const Graph & g, std::size_t power_max) -> BoundSide
{
    BoundSide best{0, "empty graph"};
    if (g.size() == 0)
        return best;
    for (std::size_t k = 1; k <= std::max<std::size_t>(1, power_max); ++k) {
        auto p = disjunctive_power(g, k);
        auto clique = max_clique(p);
        double v = std::pow(static_cast<double>(clique.size()), 1.0 / static_cast<double>(k));
        if (v > best.value + 1e-12) {
            std::ostringstream os;
            os << "omega(G^{*" << k << "})^(1/" << k << ") = " << clique.size() << "^(1/" << k << "), clique {";
            for (std::size_t i = 0; i < clique.size(); ++i)
                os << (i ? "," : "") << clique[i];
            os << "}";
            best = {v, os.str()};
        }
    }
    return best;
}

/// Minimum over the implemented semiring-homomorphic invariants. Members run concurrently;
/// ties go to the alphabetically first name.
inline auto shannon_upper(const Graph & g, const SearchConfig & cfg = {}, const CapacityOptions & options = {})
    -> UpperBoundReport
{
    if (g.size() == 0)
        throw Error(ErrorKind::DegenerateInput, "Shannon capacity bounds need a nonempty graph");
    std::vector<std::future<InvariantBound>> jobs;
    jobs.push_back(std::async(std::launch::async, [&]() {
        InvariantBound b{"chi_f", std::nullopt, ""};
        try {
            auto v = fractional_chromatic(g);
            b.value = detail::round_up(v);
            b.note = v.to_string();
        }
        catch (const Error & e) {
            b.note = e.what();
        }
        return b;
    }));
    jobs.push_back(std::async(std::launch::async, [&]() {
        InvariantBound b{"theta_bar", std::nullopt, ""};
        try {
            auto t = theta_bar(g, options.theta);
            b.value = t.upper;
            b.note = "dual bound, gap " + detail::format(t.gap());
        }
        catch (const Error & e) {
            b.note = e.what();
        }
        return b;
    }));
    for (auto q : options.haemers_fields)
        jobs.push_back(std::async(std::launch::async, [&, q]() {
            InvariantBound b{"fnumfrac:haemers:" + std::to_string(q), std::nullopt, ""};
            try {
                auto f = f_number_fractional(FamilySpec::haemers(q), g, options.haemers_n_max, options.haemers_d_max, cfg);
                if (f.upper) {
                    b.value = detail::round_up(*f.upper);
                    b.note = "G -> F_" + std::to_string(f.n) + "/" + std::to_string(f.d);
                }
                else
                    b.note = "no homomorphism on the grid";
            }
            catch (const Error & e) {
                b.note = e.what();
            }
            return b;
        }));

    UpperBoundReport report;
    for (auto & j : jobs)
        report.candidates.push_back(j.get());
    std::sort(report.candidates.begin(), report.candidates.end(),
        [](const InvariantBound & a, const InvariantBound & b) { return a.name < b.name; });
    std::optional<std::size_t> winner;
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
        const auto & c = report.candidates[i];
        if (c.value && (! winner || *c.value < *report.candidates[*winner].value))
            winner = i;
    }
    if (! winner)
        throw Error(ErrorKind::SizeCap, "no invariant could be evaluated on this graph");
    const auto & w = report.candidates[*winner];
    report.best = {*w.value, w.name + " (" + w.note + ")"};
    return report;
}

/// Two-sided bound on the capacity; input G stands for Θ(complement of G).
inline auto shannon_bounds(const Graph & g, const SearchConfig & cfg = {}, const CapacityOptions & options = {})
    -> BoundInterval
{
    return {shannon_lower(g, options.power_max), shannon_upper(g, cfg, options).best};
}

/// Bounds on R(G -> H) = sup { m/n : H^{*m} -> G^{*n} }. The lower bound is the best grid
/// witness; the upper bound is min over invariants of log eta(G) / log eta(H), using an
/// upper bound for eta(G) and a lower bound for eta(H), and only when eta(H) > 1.
inline auto rate_bounds(const Graph & g, const Graph & h, const SearchConfig & cfg = {}, const CapacityOptions & options = {})
    -> BoundInterval
{
    if (g.edge_count() == 0)
        throw Error(ErrorKind::DegenerateInput, "rate bounds need G to have at least one edge");
    if (h.size() == 0)
        throw Error(ErrorKind::DegenerateInput, "rate bounds need H to have at least one vertex");

    BoundInterval out;
    out.lower = {0, "trivial"};
    std::string skipped;
    for (std::size_t n = 1; n <= options.n_max; ++n)
        for (std::size_t m = 1; m <= options.m_max; ++m) {
            double ratio = static_cast<double>(m) / static_cast<double>(n);
            if (ratio <= out.lower.value)
                continue;
            auto r = exists_hom(disjunctive_power(h, m), disjunctive_power(g, n), cfg);
            if (r.yes())
                out.lower = {ratio, "H^{*" + std::to_string(m) + "} -> G^{*" + std::to_string(n) + "}"};
            else if (r.answer == Answer::BudgetExceeded)
                skipped += " (m=" + std::to_string(m) + ",n=" + std::to_string(n) + " undecided)";
        }
    out.lower.certificate += skipped;

    out.upper = {std::numeric_limits<double>::infinity(), "no invariant with eta(H) > 1"};
    auto consider = [&](const std::string & name, double eta_g_upper, double eta_h_lower) {
        if (eta_h_lower <= 1.0)
            return;
        double v = std::log(eta_g_upper) / std::log(eta_h_lower);
        if (v < out.upper.value)
            out.upper = {v, "log " + name + "(G) / log " + name + "(H) = log " + detail::format(eta_g_upper) + " / log " +
                    detail::format(eta_h_lower)};
    };
    try {
        auto fg = fractional_chromatic(g), fh = fractional_chromatic(h);
        consider("chi_f", detail::round_up(fg), detail::round_down(fh));
    }
    catch (const Error &) {
    }
    try {
        auto tg = theta_bar(g, options.theta), th = theta_bar(h, options.theta);
        consider("theta_bar", tg.upper, th.lower);
    }
    catch (const Error &) {
    }
    return out;
}

} // namespace graphring
