#include <gtest/gtest.h>

#include <set>

#include "dgfree/aut_group.hpp"
#include "dgfree/errors.hpp"

using namespace dgfree;

namespace
{

const Field Q = Field::rationals();

using Key = std::vector<std::uint64_t>;

// Truncated product of coefficient vectors in k[X]/(X^m), mod p.
std::vector<std::uint64_t> truncated_product(const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v,
                                             std::uint64_t p)
{
    std::vector<std::uint64_t> w(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; i + j < u.size(); ++j)
            w[i + j] = (w[i + j] + u[i] * v[j]) % p;
    return w;
}

// Upper triangular with the unit row fixed: invertible iff the diagonal is.
bool diagonal_invertible(const std::vector<std::vector<std::uint64_t>>& rows)
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (rows[i][j] != 0)
                return false;
        if (rows[i][i] == 0)
            return false;
    }
    return true;
}

// Every map determined by the image v of X: sigma(X^k) = v^k, kept when v^m = 0 and the map is bijective.
std::set<Key> automorphisms_from_generator(std::size_t m, std::uint64_t p)
{
    std::set<Key> out;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < m; ++k)
        total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint64_t> v(m);
        std::uint64_t c = code;
        for (auto& x : v) {
            x = c % p;
            c /= p;
        }
        std::vector<std::vector<std::uint64_t>> rows(m, std::vector<std::uint64_t>(m, 0));
        rows[0][0] = 1;
        for (std::size_t k = 1; k < m; ++k)
            rows[k] = truncated_product(rows[k - 1], v, p);
        bool nilpotent = true;
        for (auto x : truncated_product(rows[m - 1], v, p))
            nilpotent = nilpotent && x == 0;
        // Truncation hides overflow past X^(m-1); an invertible constant term makes v^m nonzero.
        if (!nilpotent || v[0] != 0 || !diagonal_invertible(rows))
            continue;
        Key key;
        for (const auto& r : rows)
            key.insert(key.end(), r.begin(), r.end());
        out.insert(key);
    }
    return out;
}

// Exhaustive over all 3 x 3 matrices over F_5: unit fixed, multiplicative, bijective.
std::set<Key> naive_automorphisms_e1()
{
    const std::uint64_t p = 5;
    std::set<Key> out;
    std::vector<std::vector<std::uint64_t>> rows(3, std::vector<std::uint64_t>(3));
    for (std::uint64_t code = 0; code < 1953125; ++code) {
        std::uint64_t c = code;
        for (auto& r : rows)
            for (auto& x : r) {
                x = c % p;
                c /= p;
            }
        if (rows[0] != std::vector<std::uint64_t>{1, 0, 0})
            continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i < 3; ++i)
            for (std::size_t j = 0; ok && j < 3; ++j) {
                std::vector<std::uint64_t> lhs(3, 0);
                if (i + j < 3)
                    lhs = rows[i + j];
                ok = lhs == truncated_product(rows[i], rows[j], p);
            }
        if (!ok)
            continue;
        const long long det = static_cast<long long>(rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
                                                     rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
                                                     rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]));
        if (((det % 5) + 5) % 5 == 0)
            continue;
        Key key;
        for (const auto& r : rows)
            key.insert(key.end(), r.begin(), r.end());
        out.insert(key);
    }
    return out;
}

std::set<Key> keys(const std::vector<Matrix>& ms)
{
    std::set<Key> out;
    for (const auto& m : ms)
        out.insert(matrix_key(m));
    return out;
}

LaurentPoly var(const VarSetPtr& v, const char* name)
{
    return LaurentPoly::variable(v, name);
}

} // namespace

TEST(AutGroup, ConstraintSystemShape)
{
    const auto a = StructureConstantAlgebra::truncated_polynomial(Q, 3);
    const auto s = aut_constraints(a);
    EXPECT_EQ(s.m, 3u);
    EXPECT_EQ(s.unknown(1, 2), "c23");
    EXPECT_EQ(s.equations.size(), 3u + 27u);
    EXPECT_EQ(s.equations.front().kind, AutEquation::Kind::Unit);
    EXPECT_EQ(s.equations.back().kind, AutEquation::Kind::Multiplicative);
}

TEST(AutGroup, FamiliesSatisfyEveryConstraint)
{
    const auto v1 = family_e1();
    const auto r1 = family_membership_check(v1, StructureConstantAlgebra::truncated_polynomial(Q, 3));
    EXPECT_TRUE(r1.holds);
    EXPECT_TRUE(r1.determinant_is_unit);
    EXPECT_EQ(*r1.determinant, var(v1.parameters, "a").pow(3));

    const auto v2 = family_e2();
    const auto r2 = family_membership_check(v2, StructureConstantAlgebra::truncated_polynomial(Q, 4));
    EXPECT_TRUE(r2.holds);
    EXPECT_EQ(*r2.determinant, var(v2.parameters, "a").pow(6));
}

TEST(AutGroup, WrongFamilyReportsResidual)
{
    auto fam = family_e1();
    fam.matrix[2][2] = var(fam.parameters, "a").pow(3);
    const auto r = family_membership_check(fam, StructureConstantAlgebra::truncated_polynomial(Q, 3));
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.equation_label.has_value());
    ASSERT_TRUE(r.residual.has_value());
    EXPECT_FALSE(r.residual->is_zero());

    auto singular = family_e1();
    singular.matrix[1][1] = LaurentPoly(singular.parameters);
    singular.matrix[2][2] = LaurentPoly(singular.parameters);
    EXPECT_FALSE(family_membership_check(singular, StructureConstantAlgebra::truncated_polynomial(Q, 3)).holds);
}

TEST(AutGroup, FamilyClosure)
{
    const auto c1 = family_closure_check(family_e1());
    ASSERT_TRUE(c1.holds) << c1.failure.value_or("");
    const auto& v = c1.product_parameters.at("a").vars();
    const auto a = var(v, "a"), b = var(v, "b"), a2 = var(v, "a'"), b2 = var(v, "b'");
    EXPECT_EQ(c1.product_parameters.at("a"), a * a2);
    EXPECT_EQ(c1.product_parameters.at("b"), a * b2 + b * a2.pow(2));

    const auto c2 = family_closure_check(family_e2());
    ASSERT_TRUE(c2.holds) << c2.failure.value_or("");
    const auto& w = c2.product_parameters.at("a").vars();
    const auto x = var(w, "a"), y = var(w, "b"), z = var(w, "c");
    const auto x2 = var(w, "a'"), y2 = var(w, "b'"), z2 = var(w, "c'");
    EXPECT_EQ(c2.product_parameters.at("c"), z * x2.pow(3) + Rational(2) * y * x2 * y2 + x * z2);
    const auto& u = c2.inverse_parameters.at("a").vars();
    const auto p = var(u, "a"), q = var(u, "b"), r = var(u, "c");
    EXPECT_EQ(c2.inverse_parameters.at("a"), p.pow(-1));
    EXPECT_EQ(c2.inverse_parameters.at("b"), -(p.pow(-3) * q));
    EXPECT_EQ(c2.inverse_parameters.at("c"), Rational(2) * p.pow(-5) * q * q - p.pow(-4) * r);
}

TEST(AutGroup, BruteForceE1MatchesNaiveEnumeration)
{
    const auto a = StructureConstantAlgebra::truncated_polynomial(Field::prime(5), 3);
    const auto r = brute_force_aut(a);
    EXPECT_EQ(r.automorphisms.size(), 20u);
    EXPECT_TRUE(r.group_axioms);
    EXPECT_EQ(keys(r.automorphisms), naive_automorphisms_e1());
    EXPECT_EQ(keys(r.automorphisms), keys(instantiate_family(family_e1(), Field::prime(5))));
}

TEST(AutGroup, BruteForceCountsAgreeWithGeneratorImages)
{
    for (std::uint64_t p : {5u, 7u}) {
        for (std::size_t m : {3u, 4u}) {
            const auto a = StructureConstantAlgebra::truncated_polynomial(Field::prime(p), m);
            const auto r = brute_force_aut(a);
            const auto expected = automorphisms_from_generator(m, p);
            EXPECT_EQ(r.automorphisms.size(), m == 3 ? p * (p - 1) : p * p * (p - 1)) << "p=" << p << " m=" << m;
            EXPECT_EQ(keys(r.automorphisms), expected) << "p=" << p << " m=" << m;
            EXPECT_TRUE(r.group_axioms);
            const auto fam = m == 3 ? family_e1() : family_e2();
            EXPECT_EQ(keys(instantiate_family(fam, Field::prime(p))), expected);
        }
    }
}

TEST(AutGroup, SearchLimitAndPrimeFieldRequirement)
{
    const auto a = StructureConstantAlgebra::truncated_polynomial(Field::prime(5), 4);
    EXPECT_THROW(brute_force_aut(a, 10), InputError);
    EXPECT_THROW(brute_force_aut(StructureConstantAlgebra::truncated_polynomial(Q, 3)), InputError);
    EXPECT_THROW(instantiate_family(family_e1(), Q), InputError);
}

TEST(AutGroup, IsAutomorphism)
{
    const Field f = Field::prime(7);
    const auto a = StructureConstantAlgebra::truncated_polynomial(f, 3);
    Matrix m(f, 3, 3);
    m.set(0, 0, f.one());
    m.set(1, 1, f.from_int(3));
    m.set(1, 2, f.from_int(5));
    m.set(2, 2, f.from_int(9));
    EXPECT_TRUE(is_automorphism(a, m));
    m.set(2, 2, f.from_int(3));
    EXPECT_FALSE(is_automorphism(a, m));
    EXPECT_FALSE(is_automorphism(a, Matrix(f, 3, 3)));
}
