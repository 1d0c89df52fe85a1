#include <gtest/gtest.h>

#include "dgfree/errors.hpp"
#include "dgfree/free_algebra.hpp"

using namespace dgfree;

namespace
{
const Field Q = Field::rationals();
}

TEST(Words, IndexingMatchesLexicographicBasis)
{
    const auto basis = degree_basis(3, 3);
    ASSERT_EQ(basis.size(), 27u);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        EXPECT_EQ(word_index(basis[i], 3), i);
        EXPECT_EQ(word_at(i, 3, 3), basis[i]);
        if (i > 0) {
            EXPECT_LT(basis[i - 1], basis[i]);
        }
    }
    EXPECT_EQ(word_count(3, 0), 1u);
    EXPECT_EQ(word_count(2, 8), 256u);
}

TEST(GradedElement, ParseAndRenderRoundTrip)
{
    for (const char* text : {"x1*x3 + x3*x1", "2*x1 - 1/2*x2^2", "1", "0", "-x3*x1*x2"}) {
        const auto e = GradedElement::parse(text, 3, Q);
        EXPECT_EQ(GradedElement::parse(e.to_string(), 3, Q), e) << text;
    }
    EXPECT_EQ(GradedElement::parse("x2^2", 3, Q), GradedElement::parse("x2*x2", 3, Q));
    EXPECT_EQ(GradedElement::parse("y1*y3", 3, Q).to_string('y'), "y1*y3");
}

TEST(GradedElement, ParseRejectsBadInput)
{
    EXPECT_THROW(GradedElement::parse("x4", 3, Q), InputError);
    EXPECT_THROW(GradedElement::parse("x1 +", 3, Q), InputError);
    EXPECT_THROW(GradedElement::parse("x1 * * x2", 3, Q), InputError);
    EXPECT_THROW(GradedElement::parse("1/0*x1", 3, Q), InputError);
}

TEST(GradedElement, ProductIsConcatenation)
{
    const auto a = GradedElement::parse("x1 + x2", 3, Q);
    const auto b = GradedElement::parse("x1 - x2", 3, Q);
    // Noncommutative: (x1 + x2)(x1 - x2) = x1^2 - x1x2 + x2x1 - x2^2.
    EXPECT_EQ(a * b, GradedElement::parse("x1*x1 - x1*x2 + x2*x1 - x2*x2", 3, Q));
    EXPECT_NE(a * b, b * a);
    EXPECT_EQ(a.pow(0), GradedElement::unit(3, Q));
    EXPECT_EQ((a * b).degree(), 2u);
    EXPECT_FALSE((a + a * b).is_homogeneous());
}

TEST(GradedElement, VectorCoordinates)
{
    const auto e = GradedElement::parse("x1*x3 + 2*x3*x1", 3, Q);
    const auto v = e.to_vector(2);
    ASSERT_EQ(v.size(), 9u);
    EXPECT_EQ(v[0 * 3 + 2], Q.from_int(1));
    EXPECT_EQ(v[2 * 3 + 0], Q.from_int(2));
    EXPECT_EQ(GradedElement::from_vector(v, 3, 2, Q), e);
    EXPECT_THROW(e.to_vector(3), InputError);
}

TEST(GradedElement, PrimeFieldCoefficients)
{
    const Field f = Field::prime(5);
    const auto e = GradedElement::parse("3*x1 + 2*x1", 2, f);
    EXPECT_TRUE(e.is_zero());
}
