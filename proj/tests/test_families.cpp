#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace graphring;

namespace {

const auto complete_spec = FamilySpec::complete_family();
const auto gf2 = FamilySpec::haemers(2);

}

TEST(GaloisField, AxiomsHoldExhaustively)
{
    for (unsigned q : {2U, 3U, 4U}) {
        GaloisField f(q);
        for (unsigned a = 0; a < q; ++a) {
            EXPECT_EQ(f.add(a, 0), a);
            EXPECT_EQ(f.mul(a, 1), a);
            EXPECT_EQ(f.add(a, f.neg(a)), 0U);
            if (a) {
                EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
            }
            for (unsigned b = 0; b < q; ++b) {
                EXPECT_EQ(f.add(a, b), f.add(b, a));
                EXPECT_EQ(f.mul(a, b), f.mul(b, a));
                if (a && b) {
                    EXPECT_NE(f.mul(a, b), 0U);
                }
                for (unsigned c = 0; c < q; ++c) {
                    EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
    EXPECT_THROW(GaloisField(5), Error);
}

TEST(FamilyGraph, Examples)
{
    EXPECT_EQ(family_graph(gf2, 0).size(), 0U);
    EXPECT_EQ(family_graph(gf2, 2).size(), 6U);
    EXPECT_EQ(family_graph(gf2, 1).size(), 1U);
    for (std::size_t n = 0; n <= 3; ++n)
        EXPECT_EQ(omega(family_graph(gf2, n)), n);
    for (std::size_t n = 0; n <= 5; ++n)
        EXPECT_EQ(family_graph(complete_spec, n), complete(n));
    // F_1 over GF(q) is edgeless on the q - 1 pairs with x y = 1
    for (unsigned q : {3U, 4U}) {
        const auto & f1 = family_graph(FamilySpec::haemers(q), 1);
        EXPECT_EQ(f1.size(), q - 1);
        EXPECT_EQ(f1.edge_count(), 0U);
    }
    EXPECT_THROW(family_graph(gf2, 5), Error);
    EXPECT_THROW(family_graph(FamilySpec::haemers(3), 3), Error);
}

TEST(FamilyGraph, HaemersAdjacencyMatchesDefinition)
{
    for (unsigned q : {2U, 3U, 4U}) {
        GaloisField f(q);
        for (std::size_t n = 1; n <= (q == 2 ? 3U : 2U); ++n) {
            const auto & g = family_graph(FamilySpec::haemers(q), n);
            auto labels = haemers_labels(q, n);
            ASSERT_EQ(labels.size(), g.size());
            // count pairs with <x,y> = 1 directly
            std::size_t pairs = 0;
            for (std::size_t a = 0; a < f.space_size(n); ++a)
                for (std::size_t b = 0; b < f.space_size(n); ++b)
                    pairs += f.dot(f.decode(a, n), f.decode(b, n)) == 1 ? 1 : 0;
            EXPECT_EQ(pairs, g.size());
            for (std::size_t i = 0; i < labels.size(); ++i) {
                EXPECT_EQ(f.dot(labels[i].first, labels[i].second), 1U);
                for (std::size_t j = 0; j < labels.size(); ++j) {
                    bool adj = i != j && f.dot(labels[i].first, labels[j].second) == 0 &&
                        f.dot(labels[j].first, labels[i].second) == 0;
                    EXPECT_EQ(g.adjacent(i, j), adj);
                }
            }
            EXPECT_EQ(omega(g), n);
        }
    }
}

TEST(FamilySpec, Parse)
{
    EXPECT_EQ(FamilySpec::parse("complete"), complete_spec);
    EXPECT_EQ(FamilySpec::parse("haemers:3"), FamilySpec::haemers(3));
    EXPECT_EQ(FamilySpec::haemers(4).to_string(), "haemers:4");
    EXPECT_THROW(FamilySpec::parse("haemers:5"), Error);
    EXPECT_THROW(FamilySpec::parse("kneser"), Error);
}

TEST(SemiringFamily, Checks)
{
    auto c = check_semiring_family(complete_spec, 4);
    EXPECT_TRUE(c.ok());
    EXPECT_EQ(c.entries.size(), 2U * 25U);
    EXPECT_TRUE(check_semiring_family(gf2, 2).ok());
    for (const auto & e : check_semiring_family(FamilySpec::haemers(3), 1).entries)
        EXPECT_EQ(e.answer, Answer::Yes);
}

TEST(LinearLike, Checks)
{
    for (std::size_t n = 0; n <= 4; ++n) {
        auto r = check_linear_like(complete_spec, n, 1000);
        EXPECT_TRUE(r.ok()) << n;
        EXPECT_EQ(r.omega, n);
        EXPECT_EQ(r.flats.size(), std::size_t{1} << n);
    }
    auto h = check_linear_like(gf2, 2, 1000);
    EXPECT_TRUE(h.ok());
    EXPECT_EQ(h.omega, 2U);
    EXPECT_THROW(check_linear_like(gf2, 3, 10), Error);
}

TEST(FNumber, Examples)
{
    auto c5 = f_number(complete_spec, cycle(5), 5);
    ASSERT_TRUE(c5);
    EXPECT_EQ(c5->value, 3U);
    for (std::size_t n = 0; n <= 3; ++n) {
        auto f = f_number(gf2, complete(n), 4);
        ASSERT_TRUE(f);
        EXPECT_EQ(f->value, n);
        auto c = f_number(complete_spec, complete(n), 4);
        ASSERT_TRUE(c);
        EXPECT_EQ(c->value, n);
    }
    EXPECT_FALSE(f_number(complete_spec, complete(5), 4));
    EXPECT_EQ(f_number(gf2, Graph{}, 1)->value, 0U);
}

TEST(FNumber, CompleteFamilyIsChromaticNumber)
{
    for (const auto & g : oracle::random_corpus(30, 1, 8, 401)) {
        auto f = f_number(complete_spec, g, 8);
        ASSERT_TRUE(f);
        EXPECT_EQ(f->value, chi(g));
        EXPECT_TRUE(verify_witness(g, complete(f->value), f->witness));
    }
}

TEST(FNumber, AdditiveAndSubmultiplicative)
{
    auto corpus = oracle::random_corpus(24, 1, 4, 403);
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
        const auto & g = corpus[i];
        const auto & h = corpus[i + 1];
        for (const auto & spec : {complete_spec, gf2}) {
            auto fg = f_number(spec, g, 4), fh = f_number(spec, h, 4);
            if (! fg || ! fh)
                continue;
            if (fg->value + fh->value <= 4) {
                auto fj = f_number(spec, join(g, h), 4);
                ASSERT_TRUE(fj);
                EXPECT_EQ(fj->value, fg->value + fh->value);
            }
            if (fg->value * fh->value <= 4) {
                auto fp = f_number(spec, disjunctive(g, h), 4);
                ASSERT_TRUE(fp);
                EXPECT_LE(fp->value, fg->value * fh->value);
            }
        }
    }
}

TEST(FNumberFractional, Examples)
{
    auto c5 = f_number_fractional(complete_spec, cycle(5), 5, 2);
    ASSERT_TRUE(c5.upper);
    EXPECT_EQ(*c5.upper, Rational(5, 2));
    EXPECT_EQ(c5.omega_lower, 2U);
    EXPECT_TRUE(verify_witness(cycle(5), fractionalize(complete(c5.n), c5.d), c5.witness));

    for (const auto & spec : {complete_spec, gf2})
        for (std::size_t n = 1; n <= 3; ++n) {
            auto r = f_number_fractional(spec, complete(n), 4, 2);
            ASSERT_TRUE(r.upper);
            EXPECT_EQ(*r.upper, Rational::from_size(n));
        }

    auto kg = f_number_fractional(complete_spec, kneser(6, 2), 6, 2);
    ASSERT_TRUE(kg.upper);
    EXPECT_EQ(*kg.upper, Rational(3));
    EXPECT_EQ(kg.n, 6U);
    EXPECT_EQ(kg.d, 2U);
    EXPECT_THROW(f_number_fractional(complete_spec, cycle(5), 5, 0), Error);
}

TEST(FNumberFractional, CompleteFamilyBoundsTheLp)
{
    for (const auto & g : oracle::random_corpus(20, 1, 6, 405)) {
        auto r = f_number_fractional(complete_spec, g, 8, 2);
        auto lp = fractional_chromatic(g);
        ASSERT_TRUE(r.upper);
        EXPECT_GE(*r.upper, lp);
        if (lp.denominator() == "1" || lp.denominator() == "2") {
            EXPECT_EQ(*r.upper, lp);
        }
        EXPECT_GE(*r.upper, Rational::from_size(r.omega_lower));
    }
}

TEST(FNumberFractional, HaemersNeverAboveComplete)
{
    for (const auto & g : oracle::random_corpus(15, 1, 5, 407)) {
        auto h = f_number_fractional(gf2, g, 4, 2);
        auto c = f_number_fractional(complete_spec, g, 4, 2);
        if (c.upper) {
            ASSERT_TRUE(h.upper);
            EXPECT_LE(*h.upper, *c.upper);
        }
    }
}

TEST(FNumberAsymptotic, Examples)
{
    auto k3 = f_number_asymptotic(complete_spec, complete(3), 2, 9);
    ASSERT_TRUE(k3.upper);
    EXPECT_NEAR(*k3.upper, 3.0, 1e-12);

    auto c5one = f_number_asymptotic(complete_spec, cycle(5), 1, 5);
    ASSERT_TRUE(c5one.upper);
    EXPECT_NEAR(*c5one.upper, 3.0, 1e-12);

    auto c5 = f_number_asymptotic(complete_spec, cycle(5), 2, 9);
    auto chi2 = static_cast<double>(chi(disjunctive(cycle(5), cycle(5))));
    ASSERT_TRUE(c5.upper);
    EXPECT_LE(*c5.upper, std::sqrt(chi2) + 1e-12);
    EXPECT_NEAR(*c5.upper, std::sqrt(8.0), 1e-12);
    EXPECT_GE(*c5.upper, f_number_fractional(complete_spec, cycle(5), 5, 2).upper->to_double());
}

TEST(Minrank, Examples)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        auto r = minrank(complete(n), 2, n);
        ASSERT_TRUE(r);
        EXPECT_EQ(r->rank, n);
    }
    auto c5 = minrank(cycle(5), 2, 3);
    ASSERT_TRUE(c5);
    EXPECT_EQ(c5->rank, 3U);
    for (unsigned q : {2U, 3U, 4U}) {
        auto e = minrank(edgeless(4), q, 1);
        ASSERT_TRUE(e);
        EXPECT_EQ(e->rank, 1U);
    }
    EXPECT_FALSE(minrank(complete(4), 2, 3));
    EXPECT_THROW(minrank(complete(9), 2, 4), Error);
}

TEST(Minrank, WitnessSatisfiesConstraints)
{
    for (unsigned q : {2U, 3U}) {
        GaloisField f(q);
        for (const auto & g : oracle::random_corpus(12, 1, 6, 409 + q)) {
            auto r = minrank(g, q, 4);
            if (! r)
                continue;
            for (std::size_t v = 0; v < g.size(); ++v) {
                EXPECT_EQ(f.dot(r->x[v], r->y[v]), 1U);
                for (auto u : g.neighbours(v).members())
                    EXPECT_EQ(f.dot(r->x[u], r->y[v]), 0U);
            }
        }
    }
}

TEST(Minrank, EqualsHaemersFNumber)
{
    for (const auto & g : oracle::connected_graphs(4)) {
        auto m = minrank(g, 2, 3);
        auto f = f_number(gf2, g, 3);
        ASSERT_EQ(m.has_value(), f.has_value());
        if (m) {
            EXPECT_EQ(m->rank, f->value);
        }
    }
}

TEST(RankRepresentation, Examples)
{
    const auto & k5 = family_graph(complete_spec, 5);
    auto w = exists_hom(cycle(5), fractionalize(k5, 2));
    ASSERT_TRUE(w.yes());
    EXPECT_EQ(verify_rank_representation(canonical_representation(k5, 2, *w.witness), cycle(5), k5), Rational(5, 2));

    // K2 -> F_2 = K2 with phi(v) = {v}: each singleton has rank 1, the union has rank 2
    const auto & k2 = family_graph(complete_spec, 2);
    RankRRepresentation id{{VertexSet(2, {0}), VertexSet(2, {1})}, 1};
    EXPECT_EQ(verify_rank_representation(id, complete(2), k2), Rational(2));

    // one flat for every vertex breaks adjacency
    RankRRepresentation same{{VertexSet(2, {0}), VertexSet(2, {0})}, 1};
    try {
        verify_rank_representation(same, complete(2), k2);
        ADD_FAILURE() << "expected InvalidRepresentation";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidRepresentation);
        EXPECT_NE(std::string(e.what()).find("adjacency"), std::string::npos);
    }
    EXPECT_EQ(verify_rank_representation(same, edgeless(2), k2), Rational(1));

    RankRRepresentation too_high{{VertexSet(2, {0}), VertexSet(2, {1})}, 2};
    try {
        verify_rank_representation(too_high, complete(2), k2);
        ADD_FAILURE() << "expected InvalidRepresentation";
    }
    catch (const Error & e) {
        EXPECT_NE(std::string(e.what()).find("rank"), std::string::npos);
    }
}

TEST(RankRepresentation, CanonicalInclusionHasRankD)
{
    for (const auto & spec : {complete_spec, gf2})
        for (const auto & g : {cycle(5), petersen(), complete(2)}) {
            auto r = f_number_fractional(spec, g, spec == complete_spec ? 5 : 3, 2);
            if (! r.upper || r.d == 0)
                continue;
            const auto & fn = family_graph(spec, r.n);
            auto ratio = verify_rank_representation(canonical_representation(fn, r.d, r.witness), g, fn);
            EXPECT_LE(ratio, *r.upper);
        }
}
