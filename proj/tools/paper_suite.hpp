#pragma once

#include <graphring/graphring.hpp>

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace graphring::cli {

struct SuiteCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

namespace detail {
    inline auto fmt(double v) -> std::string
    {
        std::ostringstream os;
        os.precision(7);
        os << v;
        return os.str();
    }

    inline auto yes_no(bool b) -> std::string { return b ? "yes" : "no"; }

    /// K_2 clique S = {0,1}, K_3 clique C = {2,3,4}, apex 5 adjacent to all of S and C.
    inline auto cut_vertex_graph() -> Graph
    {
        return make_graph(6, {{0, 1}, {2, 3}, {2, 4}, {3, 4}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
    }
}

/// The published example values, each recomputed from scratch.
inline auto paper_suite(const SearchConfig & cfg) -> std::vector<SuiteCheck>
{
    using detail::fmt;
    using detail::yes_no;
    std::vector<SuiteCheck> out;
    auto add = [&](std::string name, std::string expected, const std::function<std::string()> & compute) {
        std::string got;
        try {
            got = compute();
        }
        catch (const std::exception & e) {
            got = std::string("error: ") + e.what();
        }
        bool pass = got == expected;
        out.push_back({std::move(name), std::move(expected), std::move(got), pass});
    };
    auto within = [&](std::string name, double expected, double tol, const std::function<double()> & compute) {
        std::string got;
        bool pass = false;
        try {
            double v = compute();
            got = fmt(v);
            pass = std::abs(v - expected) <= tol;
        }
        catch (const std::exception & e) {
            got = std::string("error: ") + e.what();
        }
        out.push_back({std::move(name), fmt(expected) + " +- " + fmt(tol), std::move(got), pass});
    };

    add("K6/2 equals KG(6,2) vertex for vertex", "yes", [] { return yes_no(fractionalize(complete(6), 2) == kneser(6, 2)); });
    add("eval frac(k6,2) equals kg(6,2)", "yes", [] { return yes_no(eval_expr("frac(k6,2)") == eval_expr("kg(6,2)")); });
    add("chi(C5 blown up by 2)", "5", [&] { return std::to_string(chi(blowup(cycle(5), 2), cfg)); });
    add("chi(C5 lex K2)", "5", [&] { return std::to_string(chi(lexicographic(cycle(5), complete(2)), cfg)); });
    add("chi(C5 + C5)", "6", [&] { return std::to_string(chi(join(cycle(5), cycle(5)), cfg)); });
    add("chi(K2 * C5)", "6", [&] { return std::to_string(chi(disjunctive(complete(2), cycle(5)), cfg)); });
    add("C5/2 is edgeless on 5 vertices", "n=5 m=0", [] {
        auto g = fractionalize(cycle(5), 2);
        return "n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count());
    });
    add("eval frac(c5,2)", "n=5 m=0", [] {
        auto g = eval_expr("frac(c5,2)");
        return "n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count());
    });
    add("K1/2 is empty", "0", [] { return std::to_string(fractionalize(complete(1), 2).size()); });
    add("(K1 + K1)/2 -> K1/2 + K1/2", "no", [&] {
        auto lhs = fractionalize(join(complete(1), complete(1)), 2);
        auto rhs = join(fractionalize(complete(1), 2), fractionalize(complete(1), 2));
        return to_string(exists_hom(lhs, rhs, cfg).answer);
    });
    add("(K3 blown up by 2)/2 equals K6/2", "yes",
        [] { return yes_no(fractionalize(blowup(complete(3), 2), 2) == fractionalize(complete(6), 2)); });
    add("chi(KG(6,2))", "4", [&] { return std::to_string(chi(kneser(6, 2), cfg)); });
    add("KG(6,2) -> K3", "no", [&] { return to_string(exists_hom(kneser(6, 2), complete(3), cfg).answer); });
    add("C5 -> (C5/2) blown up by 2", "no",
        [&] { return to_string(exists_hom(cycle(5), blowup(fractionalize(cycle(5), 2), 2), cfg).answer); });
    add("chi((K2 blown up by 2) * C5) = 4 * 3", "12",
        [&] { return std::to_string(chi(disjunctive(blowup(complete(2), 2), cycle(5)), cfg)); });
    add("chi(KG(5,2)) = (3k-1) - 2k + 2 at k=2", "3", [&] { return std::to_string(chi(kneser(5, 2), cfg)); });
    add("chi(KG(8,3)) = (3k-1) - 2k + 2 at k=3", "4", [&] { return std::to_string(chi(kneser(8, 3), cfg)); });
    add("KG(6,2) fractionally maps to K3", "yes at d=2", [&] {
        auto r = frachom(kneser(6, 2), complete(3), 2, cfg);
        return std::string(to_string(r.answer)) + " at d=" + std::to_string(r.d);
    });
    add("rank anomaly on the cut-vertex graph", "rank=3 |S|=2", [] {
        auto g = detail::cut_vertex_graph();
        VertexSet s(6, {0, 1});
        return "rank=" + std::to_string(rank(g, s)) + " |S|=" + std::to_string(s.count());
    });
    add("chi_f(C5)", "5/2", [] { return fractional_chromatic(cycle(5)).to_string(); });
    for (std::size_t n = 1; n <= 5; ++n)
        add("chi_f(K" + std::to_string(n) + ")", std::to_string(n), [n] { return fractional_chromatic(complete(n)).to_string(); });
    within("theta_bar(KG(6,2)) = n/k", 3.0, 1e-4, [] { return theta_bar(kneser(6, 2)).value(); });
    within("theta_bar(KG(5,2)) = n/k", 2.5, 1e-4, [] { return theta_bar(kneser(5, 2)).value(); });
    within("theta_bar(C5 blown up by 2) = 2 theta_bar(C5)", 0.0, 1e-3,
        [] { return theta_bar(blowup(cycle(5), 2)).value() - 2 * theta_bar(cycle(5)).value(); });
    for (std::size_t n = 0; n <= 3; ++n)
        add("omega(Haemers GF(2) F_" + std::to_string(n) + ")", std::to_string(n),
            [n] { return std::to_string(omega(family_graph(FamilySpec::haemers(2), n))); });
    add("linear-like holds for Haemers GF(2) at n=2, omega(F_2) = 2", "pass", [&] {
        auto r = check_linear_like(FamilySpec::haemers(2), 2, 100000, cfg);
        return std::string(r.ok() ? "pass" : "fail");
    });
    for (const auto & spec : {FamilySpec::complete_family(), FamilySpec::haemers(2), FamilySpec::haemers(3)})
        for (std::size_t n = 1; n <= 3; ++n) {
            if (spec.kind == FamilyKind::Haemers && spec.q == 3 && n > 2)
                continue;
            add("f_number(" + spec.to_string() + ", K" + std::to_string(n) + ")", std::to_string(n), [&, spec, n] {
                auto f = f_number(spec, complete(n), 4, cfg);
                return f ? std::to_string(f->value) : std::string("exceeds bound");
            });
            add("fractional f_number(" + spec.to_string() + ", K" + std::to_string(n) + ")", std::to_string(n), [&, spec, n] {
                auto f = f_number_fractional(spec, complete(n), 4, 1, cfg);
                return f.upper ? f.upper->to_string() : std::string("none");
            });
        }
    add("fractional f_number(complete, C5) on n<=5, d<=2", "5/2", [&] {
        auto f = f_number_fractional(FamilySpec::complete_family(), cycle(5), 5, 2, cfg);
        return f.upper ? f.upper->to_string() : std::string("none");
    });
    add("canonical inclusion C5 -> K5/2 is a rank-2 representation", "5/2", [&] {
        const auto & k5 = family_graph(FamilySpec::complete_family(), 5);
        auto w = exists_hom(cycle(5), fractionalize(k5, 2), cfg);
        return verify_rank_representation(canonical_representation(k5, 2, *w.witness), cycle(5), k5).to_string();
    });
    for (std::size_t n = 1; n <= 4; ++n)
        within("shannon upper bound for K" + std::to_string(n), static_cast<double>(n), 1e-6,
            [&, n] { return shannon_upper(complete(n), cfg).best.value; });
    add("shannon upper bound for KG(6,2) <= 3", "yes", [&] { return yes_no(shannon_upper(kneser(6, 2), cfg).best.value <= 3 + 1e-6); });
    within("rate(C5 -> K2) upper = log2 sqrt5", std::log2(std::sqrt(5.0)), 1e-3,
        [&] { return rate_bounds(cycle(5), complete(2), cfg).upper.value; });
    return out;
}

} // namespace graphring::cli
