#include <gtest/gtest.h>

#include "dgfree/errors.hpp"
#include "dgfree/io.hpp"

using namespace dgfree;

namespace
{

std::string data(const std::string& name)
{
    return std::string(DGFREE_TEST_DATA) + "/" + name;
}

} // namespace

TEST(Io, ParseTupleAndField)
{
    const Json j = Json::parse(R"({"field": {"kind": "prime", "p": 7}, "generators": 1, "matrices": [[["1/2"]]]})");
    const auto t = parse_tuple(j);
    EXPECT_EQ(t.field, Field::prime(7));
    EXPECT_EQ(t.matrices[0].at(0, 0), Field::prime(7).from_rational(Rational(1, 2)));
    EXPECT_THROW(parse_field(Json::parse(R"({"kind": "prime", "p": 4})")), InputError);
    EXPECT_THROW(parse_field(Json::parse(R"({"kind": "complex"})")), InputError);
    EXPECT_THROW(parse_tuple(Json::parse(R"({"field": {"kind": "rational"}, "generators": 2, "matrices": [[[0]]]})")),
                 InputError);
    EXPECT_THROW(parse_tuple(Json::parse(R"({"field": {"kind": "rational"}, "generators": 1, "matrices": [[["x"]]]})")),
                 InputError);
}

TEST(Io, AlgebraFilesAndPresets)
{
    const auto file = load_algebra(data("a1.json"));
    EXPECT_EQ(file.tuple, preset_a1().tuple());
    EXPECT_EQ(file.name, "a1");
    EXPECT_EQ(load_algebra("a2").tuple, preset_a2().tuple());
    EXPECT_THROW(load_algebra(data("malformed.json")), InputError);
    EXPECT_THROW(load_algebra(data("missing.json")), InputError);
    EXPECT_THROW((void)load_algebra(data("not_crisscross.json")).build(), InputError);
    EXPECT_NO_THROW((void)load_algebra(data("zero_tuple.json")).build());
}

TEST(Io, ModulesResolveRelativeAlgebraPaths)
{
    const auto d = load_module(data("modules/f1_relative.json"), preset_a1());
    EXPECT_EQ(d.connection, preset_f1().data().connection);
    EXPECT_THROW(load_module(data("modules/f1_relative.json"), preset_a2()), InputError);
    EXPECT_THROW(load_module("f1", preset_a2()), InputError);
    // Shape only: the corrupted connection loads and fails later.
    const auto bad = load_module(data("f1_corrupted.json"), preset_a1());
    EXPECT_FALSE(maurer_cartan_check(bad).holds);
}

TEST(Io, PresentationFile)
{
    const auto a = preset_a1();
    const auto p = load_presentation(data("presentation_a1.json"), a);
    const auto q = presentation_a1();
    ASSERT_EQ(p.generators.size(), q.generators.size());
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        EXPECT_EQ(p.generators[i].representative, q.generators[i].representative);
    const CohomologyEngine e(a, 4);
    EXPECT_TRUE(ring_presentation_check(e, p, 4).all_pass());
    EXPECT_FALSE(ring_presentation_check(e, load_presentation(data("presentation_wrong.json"), a), 4).all_pass());
}

TEST(Io, ReportsHaveFixedKeyOrder)
{
    const auto r = crisscross_report(load_algebra("a1"));
    std::vector<std::string> keys;
    for (const auto& [k, v] : r.items())
        keys.push_back(k);
    ASSERT_GE(keys.size(), 3u);
    EXPECT_EQ(keys[0], "command");
    EXPECT_EQ(r.dump(), crisscross_report(load_algebra("a1")).dump());
    EXPECT_TRUE(r.at("crisscross").get<bool>());
}

TEST(Io, AutReport)
{
    const auto r = aut_report(StructureConstantAlgebra::truncated_polynomial(Field::rationals(), 3), 5);
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.json.at("brute_force").at("count").get<std::size_t>(), 20u);
    EXPECT_TRUE(r.json.at("brute_force").at("matches_family").get<bool>());
}
