#pragma once

#include "paper_suite.hpp"

#include <graphring/graphring.hpp>
#include <graphring/random.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace graphring::cli {

/// Process exit codes.
namespace exit_code {
    inline constexpr int ok = 0;
    inline constexpr int check_failed = 1;
    inline constexpr int parse_error = 2;
    inline constexpr int size_cap = 3;
    inline constexpr int budget_exceeded = 4;
    inline constexpr int degenerate_input = 5;
    inline constexpr int no_homomorphism = 6;
    inline constexpr int other_error = 7;
}

inline auto exit_code_for(ErrorKind kind) -> int
{
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::Eval:
        case ErrorKind::InvalidParameter:
        case ErrorKind::IndexOutOfRange:
        case ErrorKind::SelfLoop:
        case ErrorKind::DuplicateEdge:
        case ErrorKind::InvalidSet: return exit_code::parse_error;
        case ErrorKind::SizeCap:
        case ErrorKind::FlatCountExceeded: return exit_code::size_cap;
        case ErrorKind::BudgetExceeded: return exit_code::budget_exceeded;
        case ErrorKind::DegenerateInput: return exit_code::degenerate_input;
        default: return exit_code::other_error;
    }
}

struct Options {
    bool json = false;
    bool witness = false;
    std::uint64_t budget = SearchConfig{}.node_budget;
    std::size_t d_max = 2;
    std::size_t n_max = 0; // 0: per-command default
    std::size_t m_max = 2;
    std::size_t power_max = 2;
    double gap_tol = 1e-6;
    unsigned threads = 1;
    bool deterministic = false;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t n = 4;
    bool eval_omega = false;
    bool eval_chi = false;

    [[nodiscard]] auto search() const -> SearchConfig
    {
        SearchConfig cfg;
        cfg.node_budget = budget;
        cfg.threads = threads;
        cfg.parallel = threads > 1 && ! deterministic;
        cfg.deterministic = ! cfg.parallel;
        return cfg;
    }

    [[nodiscard]] auto theta() const -> ThetaOptions
    {
        ThetaOptions t;
        t.gap_tol = gap_tol;
        return t;
    }

    [[nodiscard]] auto n_max_or(std::size_t fallback) const -> std::size_t { return n_max ? n_max : fallback; }
};

namespace detail {
    using nlohmann::json;

    // Seven significant digits, rounded in the given direction so printed bounds stay valid.
    inline auto directed(double v, int dir) -> std::string
    {
        if (! std::isfinite(v))
            return v > 0 ? "inf" : "-inf";
        double scaled = v;
        if (v != 0) {
            int exponent = static_cast<int>(std::floor(std::log10(std::abs(v))));
            double unit = std::pow(10.0, exponent - 6);
            double steps = v / unit;
            double r = std::round(steps);
            if (std::abs(steps - r) > 1e-9)
                r = dir > 0 ? std::ceil(steps) : dir < 0 ? std::floor(steps) : r;
            scaled = r * unit;
        }
        std::ostringstream os;
        os.precision(7);
        os << scaled;
        return os.str();
    }

    inline auto sig7(double v) -> std::string { return directed(v, 0); }

    inline auto rational_json(const Rational & r) -> json { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

    inline auto witness_string(const HomWitness & w) -> std::string
    {
        std::string s = "[";
        for (std::size_t i = 0; i < w.map.size(); ++i)
            s += (i ? "," : "") + std::to_string(w.map[i]);
        return s + "]";
    }

    inline auto vector_string(const std::vector<std::uint8_t> & v) -> std::string
    {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    }

    inline auto envelope(const std::string & command) -> json { return {{"schema", 1}, {"command", command}}; }

    inline auto cmd_eval(const std::string & text, const Options & o, std::ostream & out) -> int
    {
        auto g = eval_expr(text);
        std::size_t dmin = 0, dmax = 0;
        for (std::size_t v = 0; v < g.size(); ++v) {
            auto d = g.degree(v);
            dmin = v == 0 ? d : std::min(dmin, d);
            dmax = std::max(dmax, d);
        }
        std::optional<std::size_t> w, c;
        if (o.eval_omega)
            w = omega(g);
        if (o.eval_chi)
            c = chi(g, o.search());
        if (o.json) {
            auto j = envelope("eval");
            j["expr"] = text;
            j["n"] = g.size();
            j["m"] = g.edge_count();
            j["min_degree"] = dmin;
            j["max_degree"] = dmax;
            if (w)
                j["omega"] = *w;
            if (c)
                j["chi"] = *c;
            if (o.witness) {
                json edges = json::array();
                for (auto [a, b] : g.edges())
                    edges.push_back({a, b});
                j["edges"] = edges;
            }
            out << j.dump() << '\n';
        }
        else {
            out << "n=" << g.size() << " m=" << g.edge_count() << " degree=[" << dmin << "," << dmax << "]";
            if (w)
                out << " omega=" << *w;
            if (c)
                out << " chi=" << *c;
            out << '\n';
            if (o.witness)
                write_edge_list(out, g);
        }
        return exit_code::ok;
    }

    inline auto cmd_invariant(const std::string & name, const std::string & text, const Options & o, std::ostream & out) -> int
    {
        auto g = eval_expr(text);
        auto cfg = o.search();
        json j = envelope("invariant");
        j["invariant"] = name;
        j["expr"] = text;
        std::string value, detail;
        auto sized = [&](std::size_t v) {
            value = std::to_string(v);
            j["value"] = v;
        };
        if (name == "omega" || name == "alpha") {
            auto source = name == "omega" ? g : complement(g);
            auto c = max_clique(source);
            sized(c.size());
            VertexSet s(g.size());
            for (auto v : c)
                s.set(v);
            detail = (name == "omega" ? "clique " : "independent set ") + s.to_string();
            j["witness"] = c;
        }
        else if (name == "chi") {
            auto r = chromatic(g, cfg);
            sized(r.colours);
            detail = "colouring " + witness_string(r.colouring);
            j["witness"] = r.colouring.map;
        }
        else if (name == "chif") {
            auto r = fractional_chromatic_solution(g);
            value = r.value.to_string();
            j["value"] = rational_json(r.value);
            json weights = json::array();
            for (const auto & [set, w] : r.weights) {
                detail += (detail.empty() ? "" : " ") + w.to_string() + "*" + set.to_string();
                weights.push_back({{"set", set.members()}, {"weight", rational_json(w)}});
            }
            j["witness"] = weights;
        }
        else if (name == "theta-bar") {
            auto r = theta_bar(g, o.theta());
            value = sig7(r.value()) + " +- " + sig7(r.gap() / 2);
            j["lower"] = r.lower;
            j["upper"] = r.upper;
            j["converged"] = r.converged;
            j["iterations"] = r.iterations;
            detail = "enclosure [" + directed(r.lower, -1) + ", " + directed(r.upper, 1) + "] after " +
                std::to_string(r.iterations) + " iterations" + (r.converged ? "" : " (not converged)");
        }
        else if (name.rfind("fnumfrac:", 0) == 0) {
            auto spec = FamilySpec::parse(name.substr(9));
            auto r = f_number_fractional(spec, g, o.n_max_or(6), o.d_max, cfg);
            j["omega_lower"] = r.omega_lower;
            j["grid"] = {{"n_max", o.n_max_or(6)}, {"d_max", o.d_max}};
            if (r.upper) {
                value = "<= " + r.upper->to_string();
                j["upper"] = rational_json(*r.upper);
                j["n"] = r.n;
                j["d"] = r.d;
                j["witness"] = r.witness.map;
                detail = "G -> F_" + std::to_string(r.n) + "/" + std::to_string(r.d) + " via " + witness_string(r.witness);
            }
            else {
                value = "none on grid";
                j["upper"] = nullptr;
            }
            value += " (lower bound omega = " + std::to_string(r.omega_lower) + ")";
        }
        else if (name.rfind("fnum:", 0) == 0) {
            auto spec = FamilySpec::parse(name.substr(5));
            auto r = f_number(spec, g, o.n_max_or(8), cfg);
            if (r) {
                sized(r->value);
                detail = "G -> F_" + std::to_string(r->value) + " via " + witness_string(r->witness);
                j["witness"] = r->witness.map;
            }
            else {
                value = "exceeds bound " + std::to_string(o.n_max_or(8));
                j["value"] = nullptr;
                j["exceeds_bound"] = o.n_max_or(8);
            }
        }
        else if (name.rfind("minrank:", 0) == 0) {
            auto q = static_cast<unsigned>(std::stoul(name.substr(8)));
            auto r_max = o.n_max_or(minrank_max_rank);
            auto r = minrank(g, q, r_max);
            if (r) {
                sized(r->rank);
                json vecs = json::array();
                for (std::size_t v = 0; v < g.size(); ++v) {
                    detail += (v ? " " : "") + std::to_string(v) + ":" + vector_string(r->x[v]) + vector_string(r->y[v]);
                    vecs.push_back({{"x", r->x[v]}, {"y", r->y[v]}});
                }
                j["witness"] = vecs;
            }
            else {
                value = "exceeds bound " + std::to_string(r_max);
                j["value"] = nullptr;
                j["exceeds_bound"] = r_max;
            }
        }
        else
            throw Error(ErrorKind::Parse, "unknown invariant '" + name +
                    "' (omega, chi, alpha, chif, theta-bar, fnum:SPEC, fnumfrac:SPEC, minrank:q)");

        if (o.json)
            out << j.dump() << '\n';
        else {
            out << value << '\n';
            if (o.witness && ! detail.empty())
                out << detail << '\n';
        }
        return exit_code::ok;
    }

    inline auto bound_json(const BoundInterval & b) -> json
    {
        return {{"lower", {{"value", b.lower.value}, {"certificate", b.lower.certificate}}},
            {"upper", {{"value", std::isfinite(b.upper.value) ? json(b.upper.value) : json(nullptr)}, {"certificate", b.upper.certificate}}}};
    }

    inline void print_bound(const BoundInterval & b, std::ostream & out)
    {
        out << "[" << directed(b.lower.value, -1) << ", " << directed(b.upper.value, 1) << "]\n";
        out << "lower: " << b.lower.certificate << '\n';
        out << "upper: " << b.upper.certificate << '\n';
    }

    inline auto capacity_options(const Options & o) -> CapacityOptions
    {
        CapacityOptions c;
        c.power_max = o.power_max;
        c.theta = o.theta();
        c.haemers_d_max = o.d_max;
        c.m_max = o.m_max;
        c.n_max = o.n_max_or(2);
        return c;
    }

    inline auto cmd_shannon(const std::string & text, const Options & o, std::ostream & out) -> int
    {
        auto g = eval_expr(text);
        auto copts = capacity_options(o);
        auto upper = shannon_upper(g, o.search(), copts);
        BoundInterval b{shannon_lower(g, copts.power_max), upper.best};
        if (o.json) {
            auto j = envelope("shannon");
            j["expr"] = text;
            j.update(bound_json(b));
            json cands = json::array();
            for (const auto & c : upper.candidates)
                cands.push_back({{"invariant", c.name}, {"value", c.value ? json(*c.value) : json(nullptr)}, {"note", c.note}});
            j["invariants"] = cands;
            out << j.dump() << '\n';
        }
        else {
            print_bound(b, out);
            if (o.witness)
                for (const auto & c : upper.candidates)
                    out << "  " << c.name << ": " << (c.value ? directed(*c.value, 1) : std::string("n/a")) << " (" << c.note << ")\n";
        }
        return exit_code::ok;
    }

    inline auto cmd_rate(const std::string & gtext, const std::string & htext, const Options & o, std::ostream & out) -> int
    {
        auto g = eval_expr(gtext), h = eval_expr(htext);
        auto b = rate_bounds(g, h, o.search(), capacity_options(o));
        if (o.json) {
            auto j = envelope("rate");
            j["g"] = gtext;
            j["h"] = htext;
            j.update(bound_json(b));
            out << j.dump() << '\n';
        }
        else
            print_bound(b, out);
        return exit_code::ok;
    }

    inline auto answer_code(Answer a) -> int
    {
        return a == Answer::Yes ? exit_code::ok : a == Answer::No ? exit_code::no_homomorphism : exit_code::budget_exceeded;
    }

    inline auto cmd_hom(const std::string & gtext, const std::string & htext, const Options & o, std::ostream & out) -> int
    {
        auto g = eval_expr(gtext), h = eval_expr(htext);
        auto r = exists_hom(g, h, o.search());
        if (o.json) {
            auto j = envelope("hom");
            j["answer"] = to_string(r.answer);
            j["nodes"] = r.nodes;
            if (r.witness)
                j["witness"] = r.witness->map;
            out << j.dump() << '\n';
        }
        else {
            out << to_string(r.answer) << '\n';
            if (o.witness && r.witness)
                out << witness_string(*r.witness) << '\n';
        }
        return answer_code(r.answer);
    }

    inline auto cmd_frachom(const std::string & gtext, const std::string & htext, const Options & o, std::ostream & out) -> int
    {
        auto g = eval_expr(gtext), h = eval_expr(htext);
        auto r = frachom(g, h, o.d_max, o.search());
        if (o.json) {
            auto j = envelope("frachom");
            j["answer"] = to_string(r.answer);
            j["d_max"] = o.d_max;
            if (r.witness) {
                j["d"] = r.d;
                j["witness"] = r.witness->map;
            }
            out << j.dump() << '\n';
        }
        else {
            out << to_string(r.answer);
            if (r.answer == Answer::Yes)
                out << " at d=" << r.d;
            else
                out << " (d <= " << o.d_max << ")";
            out << '\n';
            if (o.witness && r.witness)
                out << witness_string(*r.witness) << '\n';
        }
        return answer_code(r.answer);
    }

    inline auto report(const std::string & suite, const std::vector<SuiteCheck> & checks, const Options & o, std::ostream & out) -> int
    {
        bool all = true;
        for (const auto & c : checks)
            all = all && c.pass;
        if (o.json) {
            auto j = envelope("check");
            j["suite"] = suite;
            j["pass"] = all;
            json items = json::array();
            for (const auto & c : checks)
                items.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
            j["checks"] = items;
            out << j.dump() << '\n';
        }
        else {
            for (const auto & c : checks)
                out << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected << ", computed " << c.computed << '\n';
            std::size_t passed = 0;
            for (const auto & c : checks)
                passed += c.pass ? 1 : 0;
            out << suite << ": " << passed << "/" << checks.size() << " passed\n";
        }
        return all ? exit_code::ok : exit_code::check_failed;
    }

    inline auto adjunction_suite(const Options & o) -> std::vector<SuiteCheck>
    {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<std::size_t> dist_d(1, 3);
        std::size_t agree = 0, discrepancies = 0, undecided = 0;
        auto cfg = o.search();
        for (std::size_t t = 0; t < o.trials; ++t) {
            auto g = random_graph_between(1, 6, rng);
            auto h = random_graph_between(1, 6, rng);
            auto d = dist_d(rng);
            auto left = exists_hom(blowup(g, d), h, cfg);
            auto right = exists_hom(g, fractionalize(h, d), cfg);
            if (left.answer == Answer::BudgetExceeded || right.answer == Answer::BudgetExceeded)
                ++undecided;
            else if (left.answer == right.answer)
                ++agree;
            else
                ++discrepancies;
        }
        return {{"G blown up by d -> H iff G -> H/d over " + std::to_string(o.trials) + " random triples (seed " +
                        std::to_string(o.seed) + ")",
            "0 discrepancies",
            std::to_string(discrepancies) + " discrepancies, " + std::to_string(agree) + " agreements, " +
                std::to_string(undecided) + " undecided",
            discrepancies == 0}};
    }

    inline auto family_suite(const FamilySpec & spec, const Options & o) -> std::vector<SuiteCheck>
    {
        std::vector<SuiteCheck> out;
        auto n_max = o.n_max_or(2);
        auto r = check_semiring_family(spec, n_max, o.search());
        for (const auto & e : r.entries) {
            std::string sym = e.operation == "join" ? " + " : " * ";
            std::string target = std::to_string(e.operation == "join" ? e.n + e.m : e.n * e.m);
            out.push_back({"F_" + std::to_string(e.n) + sym + "F_" + std::to_string(e.m) + " -> F_" + target, "yes",
                to_string(e.answer), e.answer == Answer::Yes});
        }
        return out;
    }

    inline auto linear_like_suite(const FamilySpec & spec, const Options & o) -> std::vector<SuiteCheck>
    {
        std::vector<SuiteCheck> out;
        for (std::size_t n = 0; n <= o.n; ++n) {
            auto r = check_linear_like(spec, n, 100000, o.search());
            out.push_back({"omega(F_" + std::to_string(n) + ")", std::to_string(n), std::to_string(r.omega), r.omega_ok()});
            std::size_t good = 0;
            for (const auto & f : r.flats)
                good += f.answer == Answer::Yes ? 1 : 0;
            out.push_back({"flats of F_" + std::to_string(n) + " induce F_rank", std::to_string(r.flats.size()) + "/" + std::to_string(r.flats.size()),
                std::to_string(good) + "/" + std::to_string(r.flats.size()), good == r.flats.size()});
        }
        return out;
    }

    inline auto cmd_check(const std::string & suite, const Options & o, std::ostream & out) -> int
    {
        if (suite == "adjunction")
            return report(suite, adjunction_suite(o), o, out);
        if (suite == "paper")
            return report(suite, paper_suite(o.search()), o, out);
        if (suite.rfind("semiring-family:", 0) == 0)
            return report(suite, family_suite(FamilySpec::parse(suite.substr(16)), o), o, out);
        if (suite.rfind("linear-like:", 0) == 0)
            return report(suite, linear_like_suite(FamilySpec::parse(suite.substr(12)), o), o, out);
        throw Error(ErrorKind::Parse, "unknown suite '" + suite + "' (adjunction, paper, semiring-family:SPEC, linear-like:SPEC)");
    }
}

/// Runs the command line; args excludes the program name.
inline auto run(std::vector<std::string> args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Graph semiring toolkit: products, homomorphisms, invariants and capacity bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    std::string expr, expr2, name, suite;

    app.add_flag("--json", o.json, "JSON output (schema 1)");
    app.add_flag("--witness", o.witness, "print witnesses and certificates");
    app.add_option("--budget", o.budget, "search node budget")->check(CLI::PositiveNumber);
    app.add_option("--d-max", o.d_max, "largest d for fractional searches")->check(CLI::PositiveNumber);
    app.add_option("--n-max", o.n_max, "largest n for family searches")->check(CLI::PositiveNumber);
    app.add_option("--m-max", o.m_max, "largest m for rate grids")->check(CLI::PositiveNumber);
    app.add_option("--power-max", o.power_max, "largest disjunctive power")->check(CLI::PositiveNumber);
    app.add_option("--gap-tol", o.gap_tol, "theta enclosure tolerance")->check(CLI::PositiveNumber);
    app.add_option("--threads", o.threads, "search worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--deterministic", o.deterministic, "reproducible branching and witnesses");
    app.add_option("--seed", o.seed, "seed for randomized checks");

    auto * eval = app.add_subcommand("eval", "summarize a graph expression");
    eval->add_option("expr", expr)->required();
    eval->add_flag("--omega", o.eval_omega, "also compute the clique number");
    eval->add_flag("--chi", o.eval_chi, "also compute the chromatic number");

    auto * inv = app.add_subcommand("invariant", "compute one invariant");
    inv->add_option("name", name, "omega|chi|alpha|chif|theta-bar|fnum:SPEC|fnumfrac:SPEC|minrank:q")->required();
    inv->add_option("expr", expr)->required();

    auto * check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", suite, "adjunction|paper|semiring-family:SPEC|linear-like:SPEC")->required();
    check->add_option("--trials", o.trials, "random trials for the adjunction suite");
    check->add_option("--n", o.n, "largest n for the linear-like suite");

    auto * shannon = app.add_subcommand("shannon", "bound the Shannon capacity of the complement of G");
    shannon->add_option("expr", expr)->required();

    auto * rate = app.add_subcommand("rate", "bound the rate R(G -> H)");
    rate->add_option("source", expr)->required();
    rate->add_option("target", expr2)->required();

    auto * hom = app.add_subcommand("hom", "decide G -> H (exit 0 yes, 6 no, 4 budget exceeded)");
    hom->add_option("source", expr)->required();
    hom->add_option("target", expr2)->required();

    auto * fhom = app.add_subcommand("frachom", "search d <= d-max with G blown up by d -> H blown up by d");
    fhom->add_option("source", expr)->required();
    fhom->add_option("target", expr2)->required();

    // CLI11 parses a reversed argument vector
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_code::ok;
    }
    catch (const CLI::ParseError & e) {
        err << e.what() << '\n';
        return exit_code::parse_error;
    }

    try {
        if (eval->parsed())
            return detail::cmd_eval(expr, o, out);
        if (inv->parsed())
            return detail::cmd_invariant(name, expr, o, out);
        if (check->parsed())
            return detail::cmd_check(suite, o, out);
        if (shannon->parsed())
            return detail::cmd_shannon(expr, o, out);
        if (rate->parsed())
            return detail::cmd_rate(expr, expr2, o, out);
        if (hom->parsed())
            return detail::cmd_hom(expr, expr2, o, out);
        if (fhom->parsed())
            return detail::cmd_frachom(expr, expr2, o, out);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::other_error;
    }
    return exit_code::other_error;
}

} // namespace graphring::cli
