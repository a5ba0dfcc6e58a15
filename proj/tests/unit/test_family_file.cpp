#include "edf/errors.hpp"
#include "edf/family_file.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace edf;

TEST_CASE("parses the cyclotomic file")
{
    auto f = testing::load("z13_cyclotomic.edf");
    CHECK(f.group.spec() == GroupSpec::field_additive(13));
    REQUIRE(f.digraph.has_value());
    CHECK(*f.digraph == oriented_cycle(3));
    CHECK(f.family.sets == testing::family({{1, 5, 8, 12}, {2, 3, 10, 11}, {4, 6, 7, 9}}).sets);
}

TEST_CASE("product and dihedral tokens")
{
    auto f = testing::load("z14x2_noncyclic.edf");
    CHECK(f.family[1][0].index == 17);
    auto d = testing::load("d28.edf");
    CHECK(d.family[0] == testing::ints({0, 11, 8}));
    CHECK(d.family[1] == testing::ints({4, 16, 20}));
    auto a = testing::load("z19_adjacent.edf");
    CHECK(a.mode == DisjointMode::adjacent_disjoint);
}

TEST_CASE("round trip")
{
    for (auto name : {"z13_cyclotomic.edf", "z14x2_noncyclic.edf", "d28.edf", "z19_adjacent.edf", "z17_scedf.edf"}) {
        auto f = testing::load(name);
        auto text = emit_family_file(f);
        auto g = parse_family_file(text);
        CHECK(g.group == f.group);
        CHECK(g.family == f.family);
        CHECK(g.mode == f.mode);
        CHECK(emit_family_file(g) == text);
    }
    FamilyFile v;
    v.group = Group(GroupSpec::cyclic(13));
    v.variant = Variant{VariantKind::gsedf, 1};
    v.family = testing::family({{0, 1, 2}, {3, 6, 9, 12}});
    auto back = parse_family_file(emit_family_file(v));
    REQUIRE(back.variant.has_value());
    CHECK(back.variant->kind == VariantKind::gsedf);
}

TEST_CASE("errors carry positions")
{
    auto err = [](const char* text) {
        try {
            parse_family_file(text);
        } catch (const ParseError& e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(err("group cyclic 13\nend\n") == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(err("group cyclic 13\nset 1 2 13\nend\n") == std::pair<std::size_t, std::size_t>{2, 9});
    CHECK(err("group cyclic 13\nset 1 2 1\nend\n") == std::pair<std::size_t, std::size_t>{2, 9});
    CHECK(err("group ring 13\nset 1\nend\n") == std::pair<std::size_t, std::size_t>{1, 7});
    CHECK(err("# c\n\ngroup cyclic 5\nset 1\n") .first == 4);
    CHECK(err("set 1\n").first == 1);
    CHECK(err("group cyclic 5\ndigraph cycle*:3\nset 1\nset 2\nend\n").first == 0); // count mismatch, no position
    CHECK_THROWS_WITH_AS(parse_family_file("group cyclic 13\nend\n"), doctest::Contains("no sets"), ParseError);
    CHECK_THROWS_AS(parse_family_file("group product 14 2\nset 1\nend\n"), ParseError);
    CHECK_THROWS_AS(read_family_file("/nonexistent/file.edf"), ParseError);
}
