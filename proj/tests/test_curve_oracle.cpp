#include <mindeg/curve_oracle.hpp>

#include <gtest/gtest.h>

using namespace mindeg;

namespace {

HyperellipticCurve hyper(int g) { return HyperellipticCurve(standard_fixture_poly(2 * g + 2)); }
CyclicTrigonalCurve trig(int r) { return CyclicTrigonalCurve(standard_fixture_poly(3 * r + 3)); }

}  // namespace

TEST(CurveTypes, ValidationErrors) {
    EXPECT_THROW(HyperellipticCurve(Poly({1, 0, 1})), std::invalid_argument);  // degree 2
    EXPECT_THROW(HyperellipticCurve(standard_fixture_poly(7)), std::invalid_argument);
    EXPECT_THROW(HyperellipticCurve(Poly({0, 0, 0, 0, 0, 0, 1})), std::invalid_argument);
    EXPECT_THROW(CyclicTrigonalCurve(standard_fixture_poly(8)), std::invalid_argument);
    EXPECT_EQ(hyper(3).genus(), 3);
    EXPECT_EQ(trig(2).target_twist(), 2);
    EXPECT_EQ(trig(2).genus(), 7);
}

TEST(Sections, HyperellipticCanonicalDimensions) {
    EXPECT_EQ(hyperelliptic_sections(hyper(2), 1).dim(), 2);
    EXPECT_EQ(hyperelliptic_sections(hyper(2), 2).dim(), 3);
    EXPECT_EQ(hyperelliptic_sections(hyper(3), 2).dim(), 6);
}

TEST(Sections, RiemannRochDimensions) {
    for (int g = 2; g <= 7; ++g) {
        const HyperellipticCurve c = hyper(g);
        EXPECT_EQ(hyperelliptic_sections(c, 1).dim(), g);
        for (int l = 2; l <= 6; ++l)
            EXPECT_EQ(hyperelliptic_sections(c, l).dim(), (2 * l - 1) * (g - 1)) << g << " " << l;
    }
}

TEST(Sections, TrigonalThetaDimensions) {
    EXPECT_EQ(trigonal_theta_sections(trig(1), 1).dim(), 2);
    EXPECT_EQ(trigonal_theta_sections(trig(1), 2).dim(), 4);
    EXPECT_EQ(trigonal_theta_sections(trig(2), 3).dim(), 12);  // strata 7 + 4 + 1
}

TEST(Sections, HalfCanonicalGradingNeedsOddGenus) {
    EXPECT_THROW(SectionRing::hyperelliptic_theta(hyper(4)), std::invalid_argument);
    EXPECT_EQ(SectionRing::hyperelliptic_theta(hyper(3)).dim(1), 2);  // h0 = r + 1
}

TEST(Sections, ProductsStayInsideTheTargetSpan) {
    const std::vector<SectionRing> rings{SectionRing::hyperelliptic_canonical(hyper(3)),
                                         SectionRing::hyperelliptic_theta(hyper(5)),
                                         SectionRing::trigonal_theta(trig(2))};
    for (const SectionRing& ring : rings)
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= 3; ++t)
                for (const CurveSection& a : ring.basis(s).elements)
                    for (const CurveSection& b : ring.basis(t).elements)
                        EXPECT_NO_THROW(ring.coordinates(ring.multiply(a, b), s + t));
}

TEST(OracleMultCodim, StatedValues) {
    EXPECT_EQ(oracle_mult_codim(SectionRing::hyperelliptic_theta(hyper(3)), 2, 2), 1);
    EXPECT_EQ(oracle_mult_codim(SectionRing::trigonal_theta(trig(1)), 1, 1), 1);
    EXPECT_EQ(oracle_mult_codim(SectionRing::trigonal_theta(trig(2)), 2, 1), 1);
}

TEST(OracleMultCodim, RejectsOutOfRangeLevels) {
    const SectionRing ring = SectionRing::trigonal_theta(trig(1));
    EXPECT_THROW(oracle_mult_codim(ring, 0, 1), std::invalid_argument);
    EXPECT_THROW(oracle_mult_codim(ring, 5, 4), std::invalid_argument);
}

TEST(PushforwardSplit, StatedValues) {
    EXPECT_EQ(oracle_pushforward_split(hyper(3)), SplitBundle({-4}));
    EXPECT_EQ(oracle_pushforward_split(trig(1)), SplitBundle({-2, -4}));
    EXPECT_EQ(oracle_pushforward_split(trig(3)), SplitBundle({-4, -8}));
}

TEST(PushforwardSplit, AgreesWithDerivedSplitting) {
    for (int g : {3, 5, 7})
        EXPECT_EQ(oracle_pushforward_split(hyper(g)), theta_splitting(2, (g - 1) / 2));
    for (int r = 1; r <= 3; ++r)
        EXPECT_EQ(oracle_pushforward_split(trig(r)), theta_splitting(3, r));
    // the pencil itself: trace-zero part O(-g-1)
    for (int g = 2; g <= 5; ++g)
        EXPECT_EQ(oracle_pushforward_split(hyper(g)), SplitBundle({-g - 1}));
}

TEST(ThetaSquare, SectionSearchVerdicts) {
    EXPECT_TRUE(theta_square_check(hyper(3)));
    EXPECT_TRUE(theta_square_check(trig(1)));
    EXPECT_TRUE(theta_square_check(CyclicTrigonalCurve(second_fixture_poly(9))));
    EXPECT_THROW(theta_square_check(hyper(4)), std::invalid_argument);
}

TEST(BruteForceProfile, StatedValues) {
    GeneratorProfile g2;
    g2.counts = {{3, 1}};
    EXPECT_EQ(canonical_profile_bruteforce(hyper(2)), g2);

    GeneratorProfile g4;
    g4.counts = {{2, 2}};
    EXPECT_EQ(canonical_profile_bruteforce(hyper(4)), g4);

    EXPECT_TRUE(canonical_profile_bruteforce(trig(1)).counts.empty());
}

TEST(BruteForceProfile, MatchesBlockEngine) {
    for (int g = 2; g <= 5; ++g)
        EXPECT_EQ(canonical_profile_bruteforce(hyper(g)), hyperelliptic_profile(g)) << g;
}

TEST(OracleVsEngine, SpotGrid) {
    const CoverModel m21 = CoverModel::theta_cover(2, 1);
    const SectionRing h3 = SectionRing::hyperelliptic_theta(hyper(3));
    const CoverModel m31 = CoverModel::theta_cover(3, 1);
    const SectionRing t1 = SectionRing::trigonal_theta(trig(1));
    for (int s = 1; s <= 3; ++s)
        for (int t = 1; s + t <= 4; ++t) {
            EXPECT_EQ(oracle_mult_codim(h3, s, t), m21.beta_codim(s, t)) << s << " " << t;
            EXPECT_EQ(oracle_mult_codim(t1, s, t), m31.beta_codim(s, t)) << s << " " << t;
        }
}

// Two squarefree branch polynomials of the same shape must give identical
// answers: nothing depends on the position of the branch points.
TEST(Genericity, SecondFixtureAgrees) {
    const CyclicTrigonalCurve a = trig(1);
    const CyclicTrigonalCurve b(second_fixture_poly(6));
    EXPECT_EQ(oracle_pushforward_split(a), oracle_pushforward_split(b));
    const SectionRing ra = SectionRing::trigonal_theta(a), rb = SectionRing::trigonal_theta(b);
    for (int s = 1; s <= 2; ++s)
        for (int t = 1; t <= 2; ++t)
            EXPECT_EQ(oracle_mult_codim(ra, s, t), oracle_mult_codim(rb, s, t));

    const HyperellipticCurve ha = hyper(2);
    const HyperellipticCurve hb(second_fixture_poly(6));
    EXPECT_EQ(canonical_profile_bruteforce(ha), canonical_profile_bruteforce(hb));
}
