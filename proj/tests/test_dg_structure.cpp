#include <gtest/gtest.h>

#include <random>

#include "dgfree/dg_algebra.hpp"
#include "dgfree/errors.hpp"
#include "oracles.hpp"

using namespace dgfree;

namespace
{

const Field Q = Field::rationals();

CrisscrossTuple tuple_from(const std::vector<std::vector<std::vector<long long>>>& ms)
{
    CrisscrossTuple t{Q, ms.size(), {}};
    for (const auto& m : ms)
        t.matrices.push_back(Matrix::from_ints(Q, m));
    return t;
}

} // namespace

TEST(Crisscross, PresetsAreCrisscrossWithZeroSquare)
{
    for (const auto& a : {preset_a1(), preset_a2()}) {
        EXPECT_TRUE(crisscross_check(a.tuple()).crisscross) << a.name();
        EXPECT_TRUE(d_squared_on_generators(a).zero) << a.name();
    }
}

TEST(Crisscross, PresetDifferentialsOnGenerators)
{
    const auto a1 = preset_a1();
    EXPECT_EQ(a1.differential_on_generator(1), a1.parse("x3^2"));
    EXPECT_EQ(a1.differential_on_generator(2), a1.parse("x2^2"));
    EXPECT_TRUE(a1.differential_on_generator(3).is_zero());
    const auto a2 = preset_a2();
    EXPECT_EQ(a2.differential_on_generator(1), a2.parse("y3^2"));
    EXPECT_EQ(a2.differential_on_generator(2), a2.parse("y1*y3 + y3*y1"));
    EXPECT_TRUE(a2.differential_on_generator(3).is_zero());
}

TEST(Crisscross, ZeroTupleIsCrisscross)
{
    EXPECT_TRUE(crisscross_check(CrisscrossTuple::zero(Q, 4)).crisscross);
}

TEST(Crisscross, ViolationIsReportedWithWitness)
{
    // d(x1) = x2^2, d(x2) = x1^2: d^2(x1) = x1^2 x2 - x2 x1^2 != 0.
    const auto t = tuple_from({{{0, 0}, {0, 1}}, {{1, 0}, {0, 0}}});
    const auto v = crisscross_check(t);
    ASSERT_FALSE(v.crisscross);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_FALSE(v.witness->sum.is_zero());
    EXPECT_FALSE(d_squared_on_generators(t).zero);
    EXPECT_THROW(DgFreeAlgebra{t}, InputError);
}

TEST(Crisscross, MalformedTupleRejected)
{
    CrisscrossTuple t{Q, 2, {Matrix::identity(Q, 2)}};
    EXPECT_THROW(t.validate(), InputError);
    CrisscrossTuple u{Q, 2, {Matrix::identity(Q, 2), Matrix(Q, 2, 3)}};
    EXPECT_THROW(u.validate(), InputError);
}

// All 3^8 tuples of two 2x2 matrices with entries in {-1, 0, 1}.
TEST(Crisscross, EquivalentToSquareZeroExhaustively)
{
    std::size_t crisscross = 0;
    for (int code = 0; code < 6561; ++code) {
        int c = code;
        std::vector<std::vector<std::vector<long long>>> ms(2, std::vector<std::vector<long long>>(2, std::vector<long long>(2)));
        for (int k = 0; k < 8; ++k) {
            ms[static_cast<std::size_t>(k / 4)][static_cast<std::size_t>((k / 2) % 2)][static_cast<std::size_t>(k % 2)] = c % 3 - 1;
            c /= 3;
        }
        const auto t = tuple_from(ms);
        bool square_zero = true;
        for (int i = 0; i < 2 && square_zero; ++i)
            square_zero = oracle::differential(t, oracle::generator_image(t, i)).empty();
        const bool cc = crisscross_check(t).crisscross;
        ASSERT_EQ(cc, square_zero) << "code " << code;
        ASSERT_EQ(d_squared_on_generators(t).zero, square_zero) << "code " << code;
        crisscross += cc;
    }
    EXPECT_GT(crisscross, 1u);
    EXPECT_LT(crisscross, 6561u);
}

TEST(Differential, LeibnizAndSquareZeroOnRandomElements)
{
    std::mt19937_64 rng(5);
    for (const auto& a : {preset_a1(), preset_a2()}) {
        for (int t = 0; t < 200; ++t) {
            const std::size_t da = rng() % 4;
            const std::size_t db = rng() % 4;
            const auto x = oracle::random_element(rng, 3, da, Q);
            const auto y = oracle::random_element(rng, 3, db, Q);
            const Scalar sign = da % 2 ? Q.from_int(-1) : Q.one();
            ASSERT_EQ(a.differential(x * y), a.differential(x) * y + sign * (x * a.differential(y)));
            ASSERT_TRUE(a.differential(a.differential(x * y)).is_zero());
            ASSERT_EQ(oracle::from_element(a.differential(x)), oracle::differential(a.tuple(), oracle::from_element(x)));
        }
    }
}

TEST(Differential, BoundaryColumnsMatchTheDerivation)
{
    for (const auto& a : {preset_a1(), preset_a2()}) {
        for (std::size_t d = 0; d <= 3; ++d) {
            const auto basis = degree_basis(3, d);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const auto w = GradedElement::monomial(3, basis[i], Q.one());
                ASSERT_EQ(a.boundary_column(d, i), a.differential(w).to_sparse(d + 1));
            }
        }
    }
}

TEST(Differential, HandExpansion)
{
    const auto a2 = preset_a2();
    // d(y1 y2) = y3^2 y2 - y1 (y1 y3 + y3 y1).
    EXPECT_EQ(a2.differential(a2.parse("y1*y2")), a2.parse("y3*y3*y2 - y1*y1*y3 - y1*y3*y1"));
    // d(y1^2) = y3^2 y1 - y1 y3^2.
    EXPECT_EQ(a2.differential(a2.parse("y1^2")), a2.parse("y3*y3*y1 - y1*y3*y3"));
}

TEST(Differential, PresetLookup)
{
    EXPECT_TRUE(algebra_preset("a1").has_value());
    EXPECT_TRUE(algebra_preset("a2").has_value());
    EXPECT_FALSE(algebra_preset("a3").has_value());
    EXPECT_FALSE(preset_a1() == preset_a2());
}
