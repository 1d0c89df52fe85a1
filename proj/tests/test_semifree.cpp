#include <gtest/gtest.h>

#include <random>

#include "dgfree/errors.hpp"
#include "dgfree/semifree.hpp"
#include "oracles.hpp"

using namespace dgfree;

namespace
{

const Field Q = Field::rationals();

ModuleElement random_module_element(std::mt19937_64& rng, const SemifreeModule& f, std::size_t d)
{
    ModuleElement e = f.zero();
    for (auto& c : e.coordinates)
        c = rng() % 2 ? oracle::random_element(rng, f.algebra().n(), d, Q, 3) : GradedElement(f.algebra().n(), Q);
    return e;
}

// Degree-d module elements form a space of dimension rank * 3^d; its differential is built by
// applying SemifreeModule::differential to every basis element.
std::size_t differential_rank(const SemifreeModule& f, std::size_t d)
{
    const std::size_t n = f.algebra().n();
    const auto words = degree_basis(n, d);
    SparseEchelon span(Q, f.rank() * word_count(n, d + 1));
    for (std::size_t i = 0; i < f.rank(); ++i) {
        for (const auto& w : words) {
            ModuleElement e = f.zero();
            e.coordinates[i] = GradedElement::monomial(n, w, Q.one());
            const auto image = f.differential(e);
            SparseVector v;
            for (std::size_t j = 0; j < f.rank(); ++j)
                for (const auto& [word, c] : image.coordinates[j].terms())
                    v.push_back({j * word_count(n, d + 1) + word_index(word, n), c});
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
            span.insert(std::move(v));
        }
    }
    return span.rank();
}

} // namespace

TEST(Semifree, PresetsSatisfyMaurerCartan)
{
    for (const auto& f : {preset_f1(), preset_f2()}) {
        const auto v = maurer_cartan_check(f);
        EXPECT_TRUE(v.holds) << f.name();
        EXPECT_TRUE(minimality_check(f));
        EXPECT_TRUE(f.data().strictly_lower_triangular());
    }
}

TEST(Semifree, PresetConnections)
{
    const auto f1 = preset_f1();
    const auto& a1 = f1.algebra();
    EXPECT_EQ(f1.labels(), (std::vector<std::string>{"1", "Se_x3", "Se_z"}));
    EXPECT_EQ(f1.connection(1, 0), a1.parse("x3"));
    EXPECT_EQ(f1.connection(2, 0), a1.parse("x1"));
    EXPECT_EQ(f1.connection(2, 1), a1.parse("x3"));

    const auto f2 = preset_f2();
    EXPECT_EQ(f2.rank(), 4u);
    // d(Se_r) = y2 + y1 Se_y3 + y3 Se_z.
    EXPECT_EQ(f2.render(f2.differential(f2.basis_element(3))), "y2 + y1*Se_y3 + y3*Se_z");
    EXPECT_EQ(f1.render(f1.differential(f1.basis_element(2))), "x1 + x3*Se_x3");
}

TEST(Semifree, DifferentialSquaresToZero)
{
    std::mt19937_64 rng(17);
    for (const auto& f : {preset_f1(), preset_f2()}) {
        for (int t = 0; t < 100; ++t) {
            const auto e = random_module_element(rng, f, rng() % 4);
            ASSERT_TRUE(f.differential(f.differential(e)).is_zero()) << f.render(e);
        }
    }
}

TEST(Semifree, DifferentialIsLinearAndTwisted)
{
    const auto f = preset_f1();
    const auto& a = f.algebra();
    ModuleElement e = f.zero();
    e.coordinates[2] = a.parse("x2");
    // d(x2 Se_z) = x2^2 Se_z - x2 (x1 + x3 Se_x3).
    const auto de = f.differential(e);
    EXPECT_EQ(de.coordinates[0], a.parse("-x2*x1"));
    EXPECT_EQ(de.coordinates[1], a.parse("-x2*x3"));
    EXPECT_EQ(de.coordinates[2], a.parse("x2^2"));
}

TEST(Semifree, HomologyOfResolutionsIsTheGroundField)
{
    for (const auto& f : {preset_f1(), preset_f2()}) {
        const auto dims = homology_dims(f, 6);
        EXPECT_EQ(dims, (std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0})) << f.name();
        // Independent count from the module differential for low degrees.
        std::size_t prev = 0;
        for (std::size_t d = 0; d <= 3; ++d) {
            const std::size_t out = differential_rank(f, d);
            EXPECT_EQ(f.rank() * word_count(3, d) - out - prev, dims[d]) << f.name() << " d=" << d;
            prev = out;
        }
    }
}

TEST(Semifree, KoszulCertificates)
{
    for (const auto& f : {preset_f1(), preset_f2()}) {
        const auto c = koszul_certificate(f, 6);
        EXPECT_TRUE(c.issued) << f.name();
        EXPECT_TRUE(c.minimal);
        EXPECT_EQ(c.rank, f.rank());
        EXPECT_FALSE(c.refusal.has_value());
    }
}

TEST(Semifree, NonResolutionIsRefused)
{
    const auto a = preset_a1();
    ConnectionData d{a, {"1"}, {{GradedElement(3, Q)}}};
    const auto f = SemifreeModule::create(d, "free");
    const auto c = koszul_certificate(f, 4);
    EXPECT_FALSE(c.issued);
    ASSERT_TRUE(c.refusal.has_value());
    EXPECT_NE(c.refusal->find("homology"), std::string::npos);
}

// Zeroing or doubling any nonzero entry of a preset connection breaks Maurer-Cartan.
TEST(Semifree, SingleEntryCorruptionsAreCaught)
{
    for (const auto& f : {preset_f1(), preset_f2()}) {
        for (std::size_t i = 0; i < f.rank(); ++i) {
            for (std::size_t j = 0; j < f.rank(); ++j) {
                if (f.connection(i, j).is_zero())
                    continue;
                for (int mode = 0; mode < 2; ++mode) {
                    ConnectionData d = f.data();
                    d.connection[i][j] = mode == 0 ? GradedElement(3, Q) : Q.from_int(2) * d.connection[i][j];
                    const auto v = maurer_cartan_check(d);
                    ASSERT_FALSE(v.holds) << f.name() << " entry " << i << "," << j;
                    ASSERT_TRUE(v.entry.has_value());
                    ASSERT_FALSE(v.residual->is_zero());
                    EXPECT_THROW(SemifreeModule::create(d), InputError);
                }
            }
        }
    }
}

TEST(Semifree, ShapeErrors)
{
    const auto a = preset_a1();
    ConnectionData wrong_size{a, {"1", "b"}, {{GradedElement(3, Q)}}};
    EXPECT_THROW(wrong_size.validate_shape(), InputError);
    ConnectionData wrong_degree{a, {"1", "b"}, {{GradedElement(3, Q), GradedElement(3, Q)}, {a.parse("x1*x2"), GradedElement(3, Q)}}};
    EXPECT_THROW(wrong_degree.validate_shape(), InputError);
    ConnectionData upper{a, {"1", "b"}, {{GradedElement(3, Q), a.parse("x3")}, {GradedElement(3, Q), GradedElement(3, Q)}}};
    EXPECT_FALSE(upper.strictly_lower_triangular());
    EXPECT_THROW(SemifreeModule::create(upper), InputError);
}

TEST(Semifree, PresetLookup)
{
    EXPECT_TRUE(module_preset("f1").has_value());
    EXPECT_TRUE(module_preset("f2").has_value());
    EXPECT_FALSE(module_preset("a1").has_value());
}
