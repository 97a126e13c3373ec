#include <mindeg/curve_oracle.hpp>
#include <mindeg/matrix.hpp>
#include <mindeg/polynomial.hpp>
#include <mindeg/rational.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace mindeg;

TEST(Rational, CanonicalForm) {
    Rational x(6, 9);
    EXPECT_EQ(numerator(x), 2);
    EXPECT_EQ(denominator(x), 3);
    x *= Rational(-3, 2);
    EXPECT_EQ(rational_to_string(x), "-1");
    EXPECT_GT(denominator(Rational(1, 7) - Rational(1, 7) * 2), 0);
}

TEST(Rational, StringRoundTrip) {
    for (const char* s : {"0", "-7", "3/4", "-22/7", "123456789123456789/2"}) {
        EXPECT_EQ(rational_to_string(rational_from_string(s)), s);
    }
    EXPECT_THROW(rational_from_string("1/0"), std::invalid_argument);
    EXPECT_THROW(rational_from_string("x"), std::invalid_argument);
    EXPECT_THROW(rational_from_string("1/2/3"), std::invalid_argument);
    EXPECT_THROW(rational_from_string("1/-2"), std::invalid_argument);
}

TEST(Rank, IdentityAndZero) {
    EXPECT_EQ(rank(RationalMatrix::identity(3)), 3);
    EXPECT_EQ(rank(RationalMatrix(4, 5)), 0);
    EXPECT_EQ(rank(RationalMatrix(0, 0)), 0);
    EXPECT_EQ(rank(RationalMatrix(0, 7)), 0);
}

TEST(Rank, VandermondeNodes012) {
    // nodes 0, 1, 2: rows (1, x, x^2); distinct nodes force full rank
    RationalMatrix v{{1, 0, 0}, {1, 1, 1}, {1, 2, 4}};
    EXPECT_EQ(rank(v), 3);
}

TEST(Rank, RowScalingAndSwapsInvariant) {
    RationalMatrix m{{2, 4, 6}, {1, 5, 9}, {3, 9, 15}};
    EXPECT_EQ(rank(m), 2);
    RationalMatrix scaled = m;
    for (std::size_t j = 0; j < 3; ++j) {
        scaled.at(0, j) *= Rational(-7, 3);
        scaled.at(2, j) *= Rational(1, 5);
    }
    EXPECT_EQ(rank(scaled), 2);
    RationalMatrix swapped{{1, 5, 9}, {3, 9, 15}, {2, 4, 6}};
    EXPECT_EQ(rank(swapped), 2);
}

TEST(ImageCodim, Basics) {
    EXPECT_EQ(image_codim(RationalMatrix::identity(3)), 0);
    EXPECT_EQ(image_codim(RationalMatrix(5, 2)), 5);
}

// The squares of the three canonical sections of the genus-3 curve
// y^2 = x^8 - 1 span a 5-dimensional subspace of the 6-dimensional
// bicanonical space: codimension 1 = g - 2.
TEST(ImageCodim, SymmetricSquareOfCanonical) {
    HyperellipticCurve c(standard_fixture_poly(8));
    ASSERT_EQ(c.genus(), 3);
    const SectionRing ring = SectionRing::hyperelliptic_canonical(c);
    const PluricanonicalBasis k1 = ring.basis(1);
    ASSERT_EQ(k1.dim(), 3);
    ASSERT_EQ(ring.dim(2), 6);
    RationalMatrix sym2(6, 6);
    std::size_t col = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j, ++col) {
            const auto coords = ring.coordinates(ring.multiply(k1.elements[i], k1.elements[j]), 2);
            for (std::size_t row = 0; row < 6; ++row) sym2.at(row, col) = coords[row];
        }
    EXPECT_EQ(image_codim(sym2), 1);
    EXPECT_EQ(cokernel_basis(sym2).size(), 1);
}

TEST(Cokernel, IdentityIsEmpty) {
    EXPECT_TRUE(cokernel_basis(RationalMatrix::identity(4)).empty());
}

TEST(Cokernel, ZeroColumnGivesUnitVectors) {
    const auto basis = cokernel_basis(RationalMatrix(2, 1));
    ASSERT_EQ(basis.size(), 2);
    EXPECT_EQ(basis[0], (std::vector<Rational>{1, 0}));
    EXPECT_EQ(basis[1], (std::vector<Rational>{0, 1}));
}

TEST(Cokernel, FunctionalsVanishOnImage) {
    RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}, {1, 3, 4}};
    const auto basis = cokernel_basis(m);
    ASSERT_EQ(static_cast<long>(basis.size()), image_codim(m));
    for (const auto& v : basis)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational dot = 0;
            for (std::size_t i = 0; i < m.rows(); ++i) dot += v[i] * m.at(i, j);
            EXPECT_EQ(dot, 0);
        }
}

TEST(Rank, RandomTransposeAndCodimInvariants) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        RationalMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(num(rng), den(rng));
        EXPECT_EQ(rank(m), rank(m.transposed()));
        EXPECT_EQ(image_codim(m) + rank(m), static_cast<long>(m.rows()));
    }
}

TEST(Poly, ArithmeticAndGcd) {
    const Poly f({-1, 0, 1});  // x^2 - 1
    const Poly g({1, 1});      // x + 1
    EXPECT_EQ((f % g).degree(), -1);
    EXPECT_EQ(gcd(f, g), g);
    EXPECT_EQ(f.eval(Rational(2)), 3);
    EXPECT_EQ((f * g).degree(), 3);
}

TEST(Poly, Squarefree) {
    EXPECT_TRUE(is_squarefree(Poly({-1, 0, 0, 0, 0, 0, 1})));   // x^6 - 1
    EXPECT_FALSE(is_squarefree(Poly({1, 2, 1})));               // (x+1)^2
    EXPECT_FALSE(is_squarefree(Poly()));
}
