#include <mindeg/ring_gen.hpp>

#include <gtest/gtest.h>

using namespace mindeg;

TEST(GradedPieceTest, BlockDecompositions) {
    const GradedPiece p = graded_piece(3, 2, 2);
    EXPECT_EQ(p.blocks.twists, (std::vector<int>{4, 1, -2}));
    EXPECT_EQ(p.block_dims(), (std::vector<long>{5, 2, 0}));
    EXPECT_EQ(p.dim(), 7);

    const GradedPiece q = graded_piece(2, 1, 3);
    EXPECT_EQ(q.blocks.twists, (std::vector<int>{3, -1}));
    EXPECT_EQ(q.dim(), 4);

    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r) {
            EXPECT_EQ(graded_piece(n, r, 0).dim(), 1);
            EXPECT_EQ(graded_piece(n, r, 1).dim(), r + 1);
        }
}

TEST(BetaCodim, StatedValues) {
    EXPECT_EQ(beta_codim(4, 1, 1, 1), 2);
    EXPECT_EQ(beta_codim(3, 2, 2, 1), 1);
    EXPECT_EQ(beta_codim(2, 1, 2, 2), 1);
    EXPECT_EQ(beta_codim(3, 1, 2, 2), 0);
    EXPECT_EQ(beta_codim(2, 1, 3, 1), 1);
}

TEST(BetaCodim, ClosedFormSlice) {
    for (int n = 2; n <= 5; ++n) {
        EXPECT_EQ(beta_codim(n, 1, 1, 1), n - 2);
        EXPECT_EQ(beta_codim(n, 1, 2, 1), 0);
        EXPECT_EQ(beta_codim(n, 1, 3, 1), 1);
        EXPECT_EQ(beta_codim(n, 1, 2, 2), n == 2 ? 1 : 0);
        for (int s = 4; s <= 6; ++s) EXPECT_EQ(beta_codim(n, 1, s, 1), 0);
        for (int r = 2; r <= 4; ++r) {
            EXPECT_EQ(beta_codim(n, r, 1, 1), static_cast<long>(r) * (n - 2));
            EXPECT_EQ(beta_codim(n, r, 2, 1), r - 1);
            for (int s = 3; s <= 6; ++s) EXPECT_EQ(beta_codim(n, r, s, 1), 0);
        }
    }
}

TEST(BetaCodim, SymmetricInFactors) {
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s)
                for (int t = s; t <= 3; ++t)
                    EXPECT_EQ(beta_codim(n, r, s, t), beta_codim(n, r, t, s));
}

TEST(BetaImageEqual, DoubleCoverLevelFour) {
    EXPECT_TRUE(beta_image_equal(2, 1, 2, 2, 3, 1));
}

// For the triple cover the square of the degree-2 piece surjects while
// beta(3, 1) misses the bottom block, so the two images differ.
TEST(BetaImageEqual, TripleCoverImagesDiffer) {
    EXPECT_EQ(beta_codim(3, 1, 2, 2), 0);
    EXPECT_EQ(beta_codim(3, 1, 3, 1), 1);
    EXPECT_FALSE(beta_image_equal(3, 1, 2, 2, 3, 1));
}

TEST(BetaImageEqual, RejectsDegenerateOrMismatchedLevels) {
    EXPECT_THROW(beta_image_equal(3, 2, 2, 1, 3, 0), std::invalid_argument);
    EXPECT_THROW(beta_image_equal(3, 2, 2, 1, 2, 2), std::invalid_argument);
}

TEST(GeneratorProfileTest, StatedValues) {
    GeneratorProfile p21;
    p21.counts = {{4, 1}};
    EXPECT_EQ(generator_profile(2, 1), p21);

    GeneratorProfile p41;
    p41.counts = {{2, 2}};
    EXPECT_EQ(generator_profile(4, 1), p41);

    GeneratorProfile p32;
    p32.counts = {{2, 2}, {3, 1}};
    EXPECT_EQ(generator_profile(3, 2), p32);
}

TEST(SurfaceProfile, ClosedFormsMatchEngine) {
    GeneratorProfile p21;
    p21.counts = {{4, 1}};
    EXPECT_EQ(surface_canonical_profile(2, 1), p21);

    GeneratorProfile p33;
    p33.counts = {{2, 3}, {3, 2}};
    EXPECT_EQ(surface_canonical_profile(3, 3), p33);

    // degree-2 count collapses for double covers but the entry stays
    const GeneratorProfile p24 = surface_canonical_profile(2, 4);
    EXPECT_EQ(p24.str(), "{2: 0, 3: 3}");
    EXPECT_EQ(p24.at(3), 3);

    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r <= 4; ++r)
            EXPECT_EQ(generator_profile(n, r), surface_canonical_profile(n, r));
}

TEST(HyperellipticProfile, LowGenus) {
    GeneratorProfile g2;
    g2.counts = {{3, 1}};
    EXPECT_EQ(hyperelliptic_profile(2), g2);

    GeneratorProfile g3;
    g3.counts = {{2, 1}};
    EXPECT_EQ(hyperelliptic_profile(3), g3);

    GeneratorProfile g6;
    g6.counts = {{2, 4}};
    EXPECT_EQ(hyperelliptic_profile(6), g6);

    EXPECT_THROW(hyperelliptic_profile(1), std::invalid_argument);
}

// The canonical grading is the even part of the half-canonical grading: for
// odd genus the two engines must produce the same generator profile.
TEST(HyperellipticProfile, MatchesEvenSubringOfHalfCanonicalGrading) {
    for (int g : {3, 5, 7}) {
        const CoverModel theta = CoverModel::theta_cover(2, (g - 1) / 2);
        EXPECT_EQ(hyperelliptic_profile(g), theta.even_subring_profile()) << g;
    }
}

// The level-4 square for a double cover misses g - 2 dimensions (the block
// computation gives 2r - 1 with g = 2r + 1).
TEST(BetaCodim, DoubleCoverSquareCodimension) {
    for (int r = 1; r <= 4; ++r) {
        const int g = 2 * r + 1;
        EXPECT_EQ(beta_codim(2, r, 2, 2), 2 * r - 1);
        EXPECT_EQ(beta_codim(2, r, 2, 2), g - 2);
        EXPECT_EQ(CoverModel::canonical_double_cover(g).beta_codim(1, 1), g - 2);
    }
}

TEST(ThetaCharDegreeOne, HyperellipticExactlyFails) {
    EXPECT_FALSE(theta_char_degree1(2, 3));  // g = 7
    EXPECT_TRUE(theta_char_degree1(3, 1));   // g = 4
    EXPECT_TRUE(theta_char_degree1(5, 2));
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r <= 3; ++r)
            EXPECT_EQ(theta_char_degree1(n, r), n >= 3);
}

TEST(GeneratorProfileTest, Printing) {
    GeneratorProfile p;
    EXPECT_EQ(p.str(), "{}");
    p.counts = {{2, 2}, {3, 1}};
    EXPECT_EQ(p.str(), "{2: 2, 3: 1}");
}
