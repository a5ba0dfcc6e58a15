#include "edf/constructions.hpp"
#include "edf/equivalence.hpp"
#include "edf/errors.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace edf;

namespace {

SetFamily image_under(const Group& g, const SetFamily& a, std::uint32_t unit, std::uint32_t beta, std::uint32_t c)
{
    const auto m = a.size();
    SetFamily out;
    out.sets.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        for (auto x : a[i])
            out.sets[(i + c) % m].push_back(Element{static_cast<std::uint32_t>((std::uint64_t{unit} * x.index + beta) % g.order())});
    return out;
}

bool same_sets(const SetFamily& a, const SetFamily& b)
{
    return sorted_sets(a) == sorted_sets(b);
}

} // namespace

TEST_CASE("a family is equivalent to itself via the identity")
{
    auto r = m4_cedf(4, 1);
    auto eq = cedf_equivalent(r.group, r.family, r.family);
    REQUIRE(eq);
    CHECK(eq.witness->sigma.is_identity());
    CHECK(eq.witness->beta == Element{0});
    CHECK(eq.witness->c == 0);
}

TEST_CASE("seeded image is recovered")
{
    auto r = m4_cedf(4, 1);
    auto b = image_under(r.group, r.family, 2, 7, 1);
    auto eq = cedf_equivalent(r.group, r.family, b);
    REQUIRE(eq);
    CHECK(same_sets(apply_witness(r.group, r.family, *eq.witness), b));
    auto back = invert_witness(r.group, *eq.witness, 4);
    CHECK(same_sets(apply_witness(r.group, b, back), r.family));
}

TEST_CASE("d = 1 and d = 2 are inequivalent")
{
    auto a = m4_cedf(4, 1), b = m4_cedf(4, 2);
    auto fa = inequivalence_fingerprint(a.group, a.family);
    auto fb = inequivalence_fingerprint(b.group, b.family);
    CHECK(fa != fb);
    // intervals A_0, A_2 reach l-1 = 3 in both; A_1, A_3 drop to 2 when d = 2
    CHECK(max_multiplicities(a.group, a.family) == std::vector<std::uint32_t>{3, 3, 3, 3});
    CHECK(max_multiplicities(b.group, b.family) == std::vector<std::uint32_t>{3, 2, 3, 2});
    EquivalenceOptions full;
    full.fingerprint_prefilter = false;
    auto eq = cedf_equivalent(a.group, a.family, b.family, full);
    CHECK_FALSE(eq);
    CHECK(eq.candidates_examined == 48u * 65u * 4u);
    auto quick = cedf_equivalent(a.group, a.family, b.family);
    CHECK_FALSE(quick);
    CHECK(quick.candidates_examined == 0);
}

TEST_CASE("symmetry on random images in a non-cyclic group")
{
    auto r = noncyclic_cedf(3);
    const auto& g = r.group;
    auto auts = automorphisms(g);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        EquivalenceWitness w{auts[rng() % auts.size()], Element{static_cast<std::uint32_t>(rng() % 28)},
                             static_cast<std::uint32_t>(rng() % 3), false};
        auto b = apply_witness(g, r.family, w);
        auto ab = cedf_equivalent(g, r.family, b);
        auto ba = cedf_equivalent(g, b, r.family);
        REQUIRE(ab);
        REQUIRE(ba);
        CHECK(same_sets(apply_witness(g, r.family, *ab.witness), b));
        CHECK(same_sets(apply_witness(g, b, *ba.witness), r.family));
        CHECK(same_sets(apply_witness(g, b, invert_witness(g, w, 3)), r.family));
        CHECK(inequivalence_fingerprint(g, b) == inequivalence_fingerprint(g, r.family));
    }
}

TEST_CASE("reversed order is only tried on request")
{
    Group g(GroupSpec::cyclic(13));
    auto a = testing::family({{0, 6}, {1, 2}, {9, 12}});
    auto rev = testing::family({{0, 6}, {9, 12}, {1, 2}});
    EquivalenceOptions opts;
    opts.try_reversed = true;
    auto eq = cedf_equivalent(g, a, rev, opts);
    REQUIRE(eq);
    CHECK(same_sets(apply_witness(g, a, *eq.witness), rev));
}

TEST_CASE("unsupported and mismatched inputs")
{
    Group d(GroupSpec::dihedral(28));
    auto fam = testing::family({{0}, {1}});
    CHECK_THROWS_AS(cedf_equivalent(d, fam, fam), UnsupportedError);
    Group z(GroupSpec::cyclic(7));
    CHECK_THROWS_AS(cedf_equivalent(z, fam, testing::family({{0}, {1}, {2}})), std::invalid_argument);
}
