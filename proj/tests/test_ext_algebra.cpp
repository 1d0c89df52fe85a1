#include <gtest/gtest.h>

#include "dgfree/errors.hpp"
#include "dgfree/ext_algebra.hpp"

using namespace dgfree;

namespace
{

const Field Q = Field::rationals();

DenseVector vec(Field f, std::initializer_list<long long> xs)
{
    DenseVector v;
    for (long long x : xs)
        v.push_back(f.from_int(x));
    return v;
}

// k x k with basis 1, e and e^2 = e.
StructureConstantAlgebra split_algebra()
{
    return StructureConstantAlgebra(Q, {"1", "e"},
                                    {{vec(Q, {1, 0}), vec(Q, {0, 1})}, {vec(Q, {0, 1}), vec(Q, {0, 1})}}, 0);
}

// Upper triangular 2 x 2 matrices with basis I, E12, E22.
StructureConstantAlgebra upper_triangular()
{
    return StructureConstantAlgebra(Q, {"I", "E12", "E22"},
                                    {{vec(Q, {1, 0, 0}), vec(Q, {0, 1, 0}), vec(Q, {0, 0, 1})},
                                     {vec(Q, {0, 1, 0}), vec(Q, {0, 0, 0}), vec(Q, {0, 1, 0})},
                                     {vec(Q, {0, 0, 1}), vec(Q, {0, 0, 0}), vec(Q, {0, 0, 1})}},
                                    0);
}

// Counts A over F_5 with A D = D A for a connection with 0/1 coefficients, by enumerating all of M_m(F_5).
std::size_t brute_force_commutant_size(const SemifreeModule& f)
{
    const std::size_t m = f.rank();
    const std::size_t n = f.algebra().n();
    std::vector<int> d(m * m * n, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& [w, c] : f.connection(i, j).terms())
                d[(i * m + j) * n + w.letters[0]] = static_cast<int>(c.rational().numerator().get_si());
    std::size_t total = 1;
    for (std::size_t k = 0; k < m * m; ++k)
        total *= 5;
    std::size_t count = 0;
    std::vector<int> a(m * m, 0);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (auto& x : a) {
            x = static_cast<int>(c % 5);
            c /= 5;
        }
        bool ok = true;
        for (std::size_t i = 0; ok && i < m; ++i)
            for (std::size_t j = 0; ok && j < m; ++j)
                for (std::size_t t = 0; ok && t < n; ++t) {
                    int s = 0;
                    for (std::size_t k = 0; k < m; ++k)
                        s += a[i * m + k] * d[(k * m + j) * n + t] - d[(i * m + k) * n + t] * a[k * m + j];
                    ok = s % 5 == 0;
                }
        count += ok;
    }
    return count;
}

} // namespace

TEST(Commutant, DimensionsAndPublishedConstraints)
{
    const auto b1 = degree_zero_endomorphism_basis(preset_f1());
    EXPECT_EQ(b1.dim(), 3u);
    EXPECT_TRUE(b1.same_solution_space(parse_constraints({"a12=a13=a23=0", "a11=a22=a33", "a21=a32"}, 3, Q)));
    const auto b2 = degree_zero_endomorphism_basis(preset_f2());
    EXPECT_EQ(b2.dim(), 4u);
    EXPECT_TRUE(b2.same_solution_space(
        parse_constraints({"a12=a13=a14=a23=a24=a34=0", "a11=a22=a33=a44", "a21=a32=a43", "a42=a31"}, 4, Q)));
    EXPECT_TRUE(b2.implies(parse_constraints({"a42=a31"}, 4, Q)[0]));
    EXPECT_FALSE(b2.implies(parse_constraints({"a41=0"}, 4, Q)[0]));
    EXPECT_FALSE(b1.same_solution_space(parse_constraints({"a12=a13=a23=0", "a11=a22=a33"}, 3, Q)));
}

TEST(Commutant, CountMatchesExhaustiveSearchOverF5)
{
    EXPECT_EQ(brute_force_commutant_size(preset_f1()), 125u);
}

TEST(Commutant, BasisMatricesCommuteWithConnection)
{
    for (const auto& f : {preset_f1(), preset_f2()}) {
        const auto b = degree_zero_endomorphism_basis(f);
        for (const auto& m : b.matrices)
            EXPECT_TRUE(b.contains(m));
        EXPECT_TRUE(b.contains(Matrix::identity(Q, f.rank())));
        Matrix e(Q, f.rank(), f.rank());
        e.set(0, f.rank() - 1, Q.one());
        EXPECT_FALSE(b.contains(e));
    }
}

TEST(Commutant, ConstraintParsing)
{
    const auto eqs = parse_constraints({"a12=a13=0"}, 3, Q);
    ASSERT_EQ(eqs.size(), 2u);
    EXPECT_THROW(parse_constraints({"a14=0"}, 3, Q), InputError);
    EXPECT_THROW(parse_constraints({"a12"}, 3, Q), InputError);
    EXPECT_THROW(parse_constraints({"a12*a13=0"}, 3, Q), InputError);
    EXPECT_EQ(unknown_name(1, 0, 3), "a21");
}

TEST(ExtAlgebra, TruncatedPolynomialStructure)
{
    const auto x1 = analyze_ext(preset_f1());
    EXPECT_TRUE(x1.commutative);
    EXPECT_TRUE(x1.local);
    ASSERT_TRUE(x1.recognized.has_value());
    EXPECT_EQ(x1.recognized->order, 3u);
    EXPECT_EQ(*x1.power_algebra, StructureConstantAlgebra::truncated_polynomial(Q, 3));
    EXPECT_EQ(x1.algebra.relations(), (std::vector<std::string>{"e2*e2 = e3", "e2*e3 = 0", "e3*e2 = 0", "e3*e3 = 0"}));

    const auto x2 = analyze_ext(preset_f2());
    ASSERT_TRUE(x2.recognized.has_value());
    EXPECT_EQ(x2.recognized->order, 4u);
    EXPECT_EQ(*x2.power_algebra, StructureConstantAlgebra::truncated_polynomial(Q, 4));
}

TEST(ExtAlgebra, FunctionalAndMatrixOrdersAgreeForCommutativeCommutants)
{
    const auto b = degree_zero_endomorphism_basis(preset_f2());
    EXPECT_EQ(ext_structure_constants(b, Composition::Functional), ext_structure_constants(b, Composition::Matrix));
}

TEST(ExtAlgebra, FrobeniusFormIsDualOfTopPower)
{
    for (std::size_t m : {3u, 4u}) {
        const auto a = StructureConstantAlgebra::truncated_polynomial(Q, m);
        const auto f = frobenius_form(a, 0);
        ASSERT_TRUE(f.has_value());
        EXPECT_TRUE(f->symmetric);
        EXPECT_EQ(f->functional, a.basis_vector(m - 1));
        EXPECT_EQ(rank(f->gram), m);
        EXPECT_FALSE(is_nondegenerate(a, a.basis_vector(0)));
        EXPECT_TRUE(is_nondegenerate(a, a.basis_vector(m - 1)));
    }
}

TEST(ExtAlgebra, RadicalOfTruncatedPolynomial)
{
    const auto a = StructureConstantAlgebra::truncated_polynomial(Q, 4);
    const auto r = radical_basis(a);
    EXPECT_EQ(r.size(), 3u);
    for (const auto& v : r)
        EXPECT_TRUE(v[0].is_zero());
    EXPECT_THROW(radical_basis(StructureConstantAlgebra::truncated_polynomial(Field::prime(5), 5)), NotApplicableError);
    EXPECT_EQ(radical_basis(StructureConstantAlgebra::truncated_polynomial(Field::prime(5), 4)).size(), 3u);
}

TEST(ExtAlgebra, RecognitionRejectsNonLocalAndNonCommutative)
{
    EXPECT_FALSE(truncated_polynomial_recognize(split_algebra()).has_value());
    EXPECT_THROW(truncated_polynomial_recognize(upper_triangular()), NotApplicableError);
    EXPECT_FALSE(upper_triangular().is_commutative());
    const auto one = StructureConstantAlgebra::truncated_polynomial(Q, 1);
    const auto r = truncated_polynomial_recognize(one);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->order, 1u);
}

TEST(ExtAlgebra, RecognitionFindsHiddenGenerator)
{
    // k[X]/(X^3) in the basis 1, X + X^2, X^2 - 1.
    const auto a = StructureConstantAlgebra::truncated_polynomial(Q, 3);
    const auto b = a.change_basis({vec(Q, {1, 0, 0}), vec(Q, {0, 1, 1}), vec(Q, {-1, 0, 1})}, {"1", "u", "v"});
    EXPECT_NE(b, a);
    const auto r = truncated_polynomial_recognize(b);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->order, 3u);
    EXPECT_EQ(power_basis(b, *r), a);
}

TEST(ExtAlgebra, StructureConstantsAreValidated)
{
    // x*x = y, x*y = 0, y*x = x breaks associativity.
    EXPECT_THROW(StructureConstantAlgebra(Q, {"1", "x", "y"},
                                          {{vec(Q, {1, 0, 0}), vec(Q, {0, 1, 0}), vec(Q, {0, 0, 1})},
                                           {vec(Q, {0, 1, 0}), vec(Q, {0, 0, 1}), vec(Q, {0, 0, 0})},
                                           {vec(Q, {0, 0, 1}), vec(Q, {0, 1, 0}), vec(Q, {0, 0, 0})}},
                                          0),
                 InputError);
    // Wrong unit.
    EXPECT_THROW(StructureConstantAlgebra(Q, {"1", "e"},
                                          {{vec(Q, {1, 0}), vec(Q, {0, 1})}, {vec(Q, {0, 1}), vec(Q, {0, 1})}}, 1),
                 InputError);
}

TEST(ExtAlgebra, AnalysisIsDeterministicInTheSeed)
{
    const auto a = analyze_ext(preset_f2(), 7);
    const auto b = analyze_ext(preset_f2(), 7);
    ASSERT_TRUE(a.frobenius && b.frobenius);
    EXPECT_EQ(a.frobenius->functional, b.frobenius->functional);
    EXPECT_EQ(a.frobenius->attempts, b.frobenius->attempts);
}
