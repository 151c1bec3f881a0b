#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace graphring;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

auto run(std::vector<std::string> args) -> Run
{
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

auto json_of(std::vector<std::string> args) -> nlohmann::json
{
    args.insert(args.begin(), "--json");
    auto r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

}

TEST(Cli, Eval)
{
    EXPECT_EQ(run({"eval", "kg(6,2)"}).out, "n=15 m=45 degree=[6,6]\n");
    EXPECT_EQ(run({"eval", "frac(c5,2)"}).out, "n=5 m=0 degree=[0,0]\n");
    EXPECT_EQ(run({"eval", "e0"}).out, "n=0 m=0 degree=[0,0]\n");
    EXPECT_EQ(run({"eval", "c5", "--omega", "--chi"}).out, "n=5 m=5 degree=[2,2] omega=2 chi=3\n");

    auto j = json_of({"eval", "petersen", "--chi"});
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["n"], 10);
    EXPECT_EQ(j["m"], 15);
    EXPECT_EQ(j["chi"], chi(petersen()));
}

TEST(Cli, EvalWitnessPrintsEdgeList)
{
    auto r = run({"eval", "k3", "--witness"});
    EXPECT_EQ(r.out, "n=3 m=3 degree=[2,2]\n3\n0 1\n0 2\n1 2\n");
}

TEST(Cli, InvariantGolden)
{
    EXPECT_EQ(run({"invariant", "chif", "c5"}).out, "5/2\n");
    EXPECT_EQ(run({"invariant", "chi", "kg(6,2)"}).out, "4\n");
    EXPECT_EQ(run({"invariant", "omega", "pow(c5,2)"}).out, "5\n");
    EXPECT_EQ(run({"invariant", "alpha", "petersen"}).out, "4\n");
    EXPECT_EQ(run({"invariant", "fnum:complete", "c5"}).out, "3\n");
    EXPECT_EQ(run({"invariant", "minrank:2", "c5"}).out, "3\n");
    EXPECT_EQ(run({"invariant", "fnumfrac:complete", "c5", "--n-max", "5"}).out, "<= 5/2 (lower bound omega = 2)\n");
    auto theta = run({"invariant", "theta-bar", "kg(6,2)"}).out;
    EXPECT_EQ(theta.rfind("3 +- ", 0), 0U) << theta;
}

TEST(Cli, InvariantMatchesLibrary)
{
    for (const char * expr : {"c7", "kg(7,2)", "join(c5,k2)", "lex(c5,e2)"}) {
        auto g = eval_expr(expr);
        EXPECT_EQ(json_of({"invariant", "chi", expr})["value"], chi(g));
        EXPECT_EQ(json_of({"invariant", "omega", expr})["value"], omega(g));
        auto f = fractional_chromatic(g);
        auto j = json_of({"invariant", "chif", expr});
        EXPECT_EQ(j["value"]["num"], f.numerator());
        EXPECT_EQ(j["value"]["den"], f.denominator());
        auto t = theta_bar(g);
        auto jt = json_of({"invariant", "theta-bar", expr});
        EXPECT_DOUBLE_EQ(jt["upper"].get<double>(), t.upper);
        EXPECT_DOUBLE_EQ(jt["lower"].get<double>(), t.lower);
    }
}

TEST(Cli, InvariantWitnesses)
{
    auto r = run({"invariant", "chif", "c5", "--witness"});
    EXPECT_EQ(r.out, "5/2\n1/2*{0,2} 1/2*{0,3} 1/2*{1,3} 1/2*{1,4} 1/2*{2,4}\n");
    auto j = json_of({"invariant", "chi", "c5"});
    HomWitness w{j["witness"].get<std::vector<std::size_t>>()};
    EXPECT_TRUE(verify_witness(cycle(5), complete(3), w));
}

TEST(Cli, ExceedsBound)
{
    auto j = json_of({"invariant", "fnum:complete", "k5", "--n-max", "4"});
    EXPECT_TRUE(j["value"].is_null());
    EXPECT_EQ(j["exceeds_bound"], 4);
    EXPECT_EQ(run({"invariant", "minrank:2", "k4", "--n-max", "3"}).out, "exceeds bound 3\n");
}

TEST(Cli, Shannon)
{
    auto r = run({"shannon", "c5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "[2.236067, 2.236069]");
    EXPECT_EQ(run({"shannon", "k4"}).out.substr(0, 6), "[4, 4]");
    auto j = json_of({"shannon", "c5"});
    EXPECT_NEAR(j["lower"]["value"].get<double>(), std::sqrt(5.0), 1e-9);
    EXPECT_EQ(j["invariants"].size(), 3U);
}

TEST(Cli, Rate)
{
    auto r = run({"rate", "c5", "k2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "[1, 1.160965]");
    auto j = json_of({"rate", "c5", "k2"});
    EXPECT_NEAR(j["upper"]["value"].get<double>(), std::log2(std::sqrt(5.0)), 1e-3);
    EXPECT_EQ(run({"rate", "e3", "k2"}).code, cli::exit_code::degenerate_input);
    EXPECT_TRUE(json_of({"rate", "k2", "k1"})["upper"]["value"].is_null());
}

TEST(Cli, HomAndFrachom)
{
    auto yes = run({"hom", "c5", "k3", "--witness"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out.substr(0, 4), "yes\n");
    EXPECT_EQ(run({"hom", "kg(6,2)", "k3"}).code, cli::exit_code::no_homomorphism);
    EXPECT_EQ(run({"hom", "kg(6,2)", "k3", "--budget", "3"}).code, cli::exit_code::budget_exceeded);
    EXPECT_EQ(run({"frachom", "kg(6,2)", "k3"}).out, "yes at d=2\n");
    EXPECT_EQ(run({"frachom", "kg(6,2)", "k3", "--d-max", "1"}).out, "no (d <= 1)\n");
    auto par = run({"hom", "kg(6,2)", "k4", "--threads", "3"});
    EXPECT_EQ(par.out, "yes\n");
}

TEST(Cli, Checks)
{
    auto adj = run({"check", "adjunction", "--trials", "100", "--seed", "7"});
    EXPECT_EQ(adj.code, 0) << adj.out;
    EXPECT_NE(adj.out.find("0 discrepancies"), std::string::npos);

    auto paper = run({"check", "paper"});
    EXPECT_EQ(paper.code, 0) << paper.out;
    EXPECT_EQ(paper.out.find("FAIL"), std::string::npos);

    EXPECT_EQ(run({"check", "linear-like:complete", "--n", "4"}).code, 0);
    EXPECT_EQ(run({"check", "linear-like:haemers:2", "--n", "2"}).code, 0);
    EXPECT_EQ(run({"check", "semiring-family:complete", "--n-max", "4"}).code, 0);
    EXPECT_EQ(run({"check", "semiring-family:haemers:2", "--n-max", "2"}).code, 0);

    auto j = json_of({"check", "paper"});
    EXPECT_TRUE(j["pass"].get<bool>());
    for (const auto & c : j["checks"])
        EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
}

TEST(Cli, PaperSuiteReportsFailures)
{
    cli::SuiteCheck bad{"x", "1", "2", false};
    std::ostringstream out;
    EXPECT_EQ(cli::detail::report("demo", {bad}, cli::Options{}, out), cli::exit_code::check_failed);
    EXPECT_NE(out.str().find("FAIL x: expected 1, computed 2"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"eval", "c("}).code, cli::exit_code::parse_error);
    EXPECT_EQ(run({"eval", "frac(k3,0)"}).code, cli::exit_code::parse_error);
    EXPECT_EQ(run({"frobnicate"}).code, cli::exit_code::parse_error);
    EXPECT_EQ(run({"invariant", "nope", "c5"}).code, cli::exit_code::parse_error);
    EXPECT_EQ(run({"check", "nope"}).code, cli::exit_code::parse_error);
    EXPECT_EQ(run({"invariant", "fnum:haemers:3", "k3"}).code, cli::exit_code::size_cap);
    EXPECT_EQ(run({"eval", "pow(k20,3)"}).code, cli::exit_code::size_cap);
    EXPECT_EQ(run({"eval", "file:/nonexistent"}).code, cli::exit_code::other_error);
    EXPECT_EQ(run({"invariant", "chi", "kg(9,2)", "--budget", "2"}).code, cli::exit_code::budget_exceeded);
    auto err = run({"eval", "join(k1 k2)"}).err;
    EXPECT_NE(err.find("at position 8"), std::string::npos) << err;
}

TEST(Cli, FileExpressions)
{
    auto path = std::string(::testing::TempDir()) + "graphring_cli_c5.txt";
    {
        std::ofstream f(path);
        f << "# five-cycle\n5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
    }
    EXPECT_EQ(run({"invariant", "chif", "file:" + path}).out, "5/2\n");
    std::remove(path.c_str());
}
