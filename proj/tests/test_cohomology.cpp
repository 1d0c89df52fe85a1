#include <gtest/gtest.h>

#include <random>

#include "dgfree/cohomology.hpp"
#include "dgfree/errors.hpp"
#include "oracles.hpp"

using namespace dgfree;

namespace
{

const Field Q = Field::rationals();

// Plain Gaussian elimination on a dense grid of rationals.
std::size_t dense_rank(std::vector<std::vector<Rational>> m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c].is_zero())
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero())
                continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] = m[i][k] - f * m[r][k];
        }
        ++r;
    }
    return r;
}

// Rank of d: degree d -> degree d+1, built by applying the oracle differential to each word.
std::size_t oracle_rank(const DgFreeAlgebra& a, std::size_t d)
{
    const auto words = degree_basis(a.n(), d);
    const auto targets = degree_basis(a.n(), d + 1);
    std::vector<std::vector<Rational>> m(words.size(), std::vector<Rational>(targets.size()));
    for (std::size_t i = 0; i < words.size(); ++i) {
        oracle::Poly p;
        oracle::add(p, std::vector<int>(words[i].letters.begin(), words[i].letters.end()), Q.one());
        for (const auto& [w, c] : oracle::differential(a.tuple(), p)) {
            Word word;
            for (int l : w)
                word.letters.push_back(static_cast<std::uint8_t>(l));
            m[i][word_index(word, a.n())] = c.rational();
        }
    }
    return dense_rank(std::move(m));
}

// z and lambda * b differ by a coboundary for some nonzero lambda.
void expect_same_class_up_to_scalar(const CohomologyEngine& e, const GradedElement& z, std::size_t d)
{
    ASSERT_EQ(e.dim(d), 1u);
    const auto coords = e.coordinates(e.class_of(z, d));
    ASSERT_EQ(coords.size(), 1u);
    ASSERT_FALSE(coords[0].is_zero());
    const GradedElement diff = coords[0] * e.basis(d)[0].representative - z;
    const auto w = e.is_coboundary(diff);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(e.algebra().differential(*w), diff);
}

} // namespace

TEST(Cohomology, DimensionsAgreeWithDenseOracle)
{
    for (const auto& a : {preset_a1(), preset_a2()}) {
        const CohomologyEngine e(a, 4);
        std::size_t prev = 0;
        for (std::size_t d = 0; d <= 4; ++d) {
            const std::size_t out = oracle_rank(a, d);
            const std::size_t words = word_count(3, d);
            EXPECT_EQ(e.degree(d).rank_out, out) << a.name() << " d=" << d;
            EXPECT_EQ(e.degree(d).rank_in, prev) << a.name() << " d=" << d;
            EXPECT_EQ(e.dim(d), words - out - prev) << a.name() << " d=" << d;
            prev = out;
        }
    }
}

TEST(Cohomology, DimensionOneThroughDegreeEight)
{
    for (const auto& a : {preset_a1(), preset_a2()}) {
        const CohomologyEngine e(a, 8);
        for (std::size_t d = 0; d <= 8; ++d)
            EXPECT_EQ(e.dim(d), 1u) << a.name() << " d=" << d;
        EXPECT_EQ(e.degree(2).nullity, 3u);
        EXPECT_EQ(e.degree(2).rank_in, 2u);
    }
}

TEST(Cohomology, LowDegreeClassesMatchPublishedRepresentatives)
{
    const auto a1 = preset_a1();
    const CohomologyEngine e1(a1, 3);
    expect_same_class_up_to_scalar(e1, a1.parse("x3"), 1);
    expect_same_class_up_to_scalar(e1, a1.parse("x1*x3 + x3*x1"), 2);
    const auto a2 = preset_a2();
    const CohomologyEngine e2(a2, 3);
    expect_same_class_up_to_scalar(e2, a2.parse("y3"), 1);
    expect_same_class_up_to_scalar(e2, a2.parse("y1^2 + y2*y3 + y3*y2"), 2);
}

TEST(Cohomology, CanonicalRepresentativeIgnoresCoboundaries)
{
    const auto a = preset_a2();
    const CohomologyEngine e(a, 4);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        const std::size_t d = 1 + rng() % 4;
        const auto& b = e.basis(d)[0].representative;
        const auto w = oracle::random_element(rng, 3, d - 1, Q);
        EXPECT_EQ(e.class_of(b + a.differential(w), d), e.basis(d)[0]);
    }
}

TEST(Cohomology, ClassOfRejectsNonCocycles)
{
    const auto a = preset_a1();
    const CohomologyEngine e(a, 3);
    EXPECT_THROW((void)e.class_of(a.parse("x1"), 1), InputError);
    EXPECT_THROW((void)e.class_of(a.parse("x3"), 2), InputError);
    EXPECT_THROW((void)e.class_of(a.parse("x3^4"), 4), InputError);
    EXPECT_FALSE(e.is_coboundary(a.parse("x3")).has_value());
    EXPECT_THROW((void)e.is_coboundary(a.parse("x1")), InputError);
}

// Products of perturbed representatives land in the same class.
TEST(Cohomology, ProductIndependentOfRepresentatives)
{
    std::mt19937_64 rng(21);
    for (const auto& a : {preset_a1(), preset_a2()}) {
        const CohomologyEngine e(a, 6);
        for (int t = 0; t < 50; ++t) {
            const std::size_t du = 1 + rng() % 3;
            const std::size_t dv = 1 + rng() % 3;
            const auto& u = e.basis(du)[0];
            const auto& v = e.basis(dv)[0];
            const CohomologyClass u2{du, u.representative + a.differential(oracle::random_element(rng, 3, du - 1, Q))};
            const CohomologyClass v2{dv, v.representative + a.differential(oracle::random_element(rng, 3, dv - 1, Q))};
            ASSERT_EQ(e.product(u2, v2), e.product(u, v));
        }
    }
}

TEST(Cohomology, ProductStructure)
{
    const auto a = preset_a1();
    const CohomologyEngine e(a, 4);
    const auto& u1 = e.basis(1)[0];
    const auto& u2 = e.basis(2)[0];
    EXPECT_TRUE(e.product(u1, u1).is_zero());
    EXPECT_FALSE(e.product(u1, u2).is_zero());
    EXPECT_EQ(e.product(u1, u2), e.product(u2, u1));
    EXPECT_FALSE(e.product(u2, u2).is_zero());
    EXPECT_THROW((void)e.product(u2, e.product(u1, u2)), InputError);
}

TEST(Cohomology, PresentationsPass)
{
    for (const auto& name : {"a1", "a2"}) {
        const auto a = *algebra_preset(name);
        const CohomologyEngine e(a, 6);
        const auto report = ring_presentation_check(e, *presentation_preset(name), 6);
        for (const auto& c : report.checks)
            EXPECT_TRUE(c.pass) << name << ": " << c.name << " " << c.detail;
        EXPECT_TRUE(report.all_pass());
    }
}

TEST(Cohomology, PresentationWitnessIdentities)
{
    const auto a1 = preset_a1();
    const auto u1 = a1.parse("x3");
    const auto u2 = a1.parse("x1*x3 + x3*x1");
    EXPECT_EQ(u1 * u2 - u2 * u1, a1.differential(a1.parse("x1^2")));
    const auto a2 = preset_a2();
    const auto v1 = a2.parse("y3");
    const auto v2 = a2.parse("y1^2 + y2*y3 + y3*y2");
    EXPECT_EQ(v1 * v2 - v2 * v1, a2.differential(a2.parse("y1*y2 + y2*y1")));
}

TEST(Cohomology, WrongPresentationsFail)
{
    const auto a = preset_a1();
    const CohomologyEngine e(a, 4);
    auto p = presentation_a1();
    p.relations.push_back({{1, 1}});
    EXPECT_FALSE(ring_presentation_check(e, p, 4).all_pass());

    auto q = presentation_a1();
    q.commutations[0].witness = a.parse("x1*x2");
    EXPECT_FALSE(ring_presentation_check(e, q, 4).all_pass());

    auto r = presentation_a1();
    r.generators.pop_back();
    r.relations.clear();
    r.commutations.clear();
    EXPECT_FALSE(ring_presentation_check(e, r, 4).all_pass());
}

TEST(Cohomology, BoundaryMatrixShape)
{
    const auto m = boundary_matrix(preset_a1(), 2);
    EXPECT_EQ(m.rows(), 27u);
    EXPECT_EQ(m.cols(), 9u);
    EXPECT_EQ(rank(m), 9u - 3u);
}
