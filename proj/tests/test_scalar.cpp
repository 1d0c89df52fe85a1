#include <gtest/gtest.h>

#include <random>

#include "dgfree/errors.hpp"
#include "dgfree/rational.hpp"
#include "dgfree/scalar.hpp"

using namespace dgfree;

TEST(Rational, NormalizesSignAndGcd)
{
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational(0, 5).to_string(), "0");
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_THROW(Rational(1, 0), InputError);
}

TEST(Rational, ParseAcceptsIntegersAndFractions)
{
    EXPECT_EQ(Rational::parse(" -7/21 "), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("+12"), Rational(12));
    EXPECT_THROW(Rational::parse("1/0"), InputError);
    EXPECT_THROW(Rational::parse("1/-2"), InputError);
    EXPECT_THROW(Rational::parse("x"), InputError);
    EXPECT_THROW(Rational::parse(""), InputError);
}

TEST(Rational, OverflowPromotesToExactBigValues)
{
    Rational x(1LL << 62);
    const Rational y = x * x * x;
    EXPECT_FALSE(y.is_small());
    EXPECT_EQ(y / x / x, x);
    EXPECT_EQ(y.to_string(), "98079714615416886934934209737619787751599303819750539264" /* 2^186 */);
    Rational h(1);
    for (int k = 2; k <= 60; ++k)
        h = h + Rational(1, k);
    Rational back = h;
    for (int k = 60; k >= 2; --k)
        back = back - Rational(1, k);
    EXPECT_EQ(back, Rational(1));
}

TEST(Rational, RandomFieldAxioms)
{
    std::mt19937_64 rng(11);
    auto draw = [&] { return Rational(static_cast<long long>(rng() % 2001) - 1000, 1 + static_cast<long long>(rng() % 999)); };
    for (int t = 0; t < 500; ++t) {
        const Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Rational(1));
        }
        EXPECT_EQ((a < b) + (b < a) + (a == b), 1);
    }
}

TEST(Field, PrimeFieldRequiresPrimeAtLeastFive)
{
    EXPECT_THROW(Field::prime(4), InputError);
    EXPECT_THROW(Field::prime(3), InputError);
    EXPECT_THROW(Field::prime(9), InputError);
    EXPECT_NO_THROW(Field::prime(5));
    EXPECT_EQ(Field::prime(7).name(), "F_7");
    EXPECT_EQ(Field::rationals().name(), "Q");
}

TEST(Field, InversesMatchExhaustiveSearch)
{
    for (std::uint64_t p : {5u, 7u, 11u, 101u}) {
        const Field f = Field::prime(p);
        for (std::uint64_t a = 1; a < p; ++a) {
            std::uint64_t expected = 0;
            for (std::uint64_t b = 1; b < p; ++b)
                if (a * b % p == 1)
                    expected = b;
            EXPECT_EQ(f.from_int(static_cast<long long>(a)).inverse().residue(), expected);
        }
        EXPECT_THROW(f.zero().inverse(), InputError);
    }
}

TEST(Field, RationalReduction)
{
    const Field f = Field::prime(5);
    EXPECT_EQ(f.from_rational(Rational(1, 2)).residue(), 3u);
    EXPECT_EQ(f.from_int(-1).residue(), 4u);
    EXPECT_EQ(f.parse("-7/3").residue(), (5u - 7u % 5u) * 2u % 5u);
    EXPECT_THROW(f.from_rational(Rational(1, 5)), InputError);
}

TEST(Scalar, MixedFieldsRejected)
{
    const Scalar q = Field::rationals().one();
    const Scalar p = Field::prime(5).one();
    EXPECT_THROW(q + p, InputError);
    EXPECT_THROW(p * q, InputError);
}
