#include "edf/automorphisms.hpp"
#include "edf/errors.hpp"
#include "edf/number_theory.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace edf;

namespace {

// Counts automorphisms of Z_n1 x Z_n2 by trying every pair of images for the
// two unit vectors and checking that the induced map is a bijection.
std::uint32_t brute_force_aut_count_2d(const Group& g)
{
    const auto& mod = g.coordinate_moduli();
    std::uint32_t count = 0;
    for (std::uint32_t a = 0; a < g.order(); ++a) {
        for (std::uint32_t b = 0; b < g.order(); ++b) {
            // (x,y) -> x*a + y*b must be well defined: order(a) | n1, order(b) | n2
            if (mod[0] % g.element_order(Element{a}) || mod[1] % g.element_order(Element{b}))
                continue;
            std::set<std::uint32_t> image;
            for (std::uint32_t x = 0; x < mod[0]; ++x) {
                Element xa = g.identity();
                for (std::uint32_t t = 0; t < x; ++t)
                    xa = g.compose(xa, Element{a});
                Element v = xa;
                for (std::uint32_t y = 0; y < mod[1]; ++y) {
                    image.insert(v.index);
                    v = g.compose(v, Element{b});
                }
            }
            count += image.size() == g.order();
        }
    }
    return count;
}

bool is_homomorphism(const Group& g, const Automorphism& s)
{
    for (std::uint32_t a = 0; a < g.order(); ++a)
        for (std::uint32_t b = 0; b < g.order(); ++b)
            if (s(g.compose(Element{a}, Element{b})) != g.compose(s(Element{a}), s(Element{b})))
                return false;
    return true;
}

} // namespace

TEST_CASE("cyclic automorphisms are the unit multipliers")
{
    for (std::uint32_t n : {1u, 2u, 12u, 13u, 65u}) {
        Group g(GroupSpec::cyclic(n));
        auto auts = automorphisms(g);
        CHECK(auts.size() == euler_phi(n));
        for (const auto& a : auts) {
            REQUIRE(a.unit.has_value());
            CHECK(a(Element{n > 1 ? 1u : 0u}).index == *a.unit % n);
        }
    }
}

TEST_CASE("Z14 x Z2 has 36 automorphisms")
{
    Group g(GroupSpec::product({14, 2}));
    auto auts = automorphisms(g);
    CHECK(brute_force_aut_count_2d(g) == 36);
    CHECK(auts.size() == 36);
    for (const auto& a : auts)
        CHECK(is_homomorphism(g, a));
}

TEST_CASE("non-cyclic counts match the brute-force oracle")
{
    for (auto spec : {GroupSpec::product({4, 2}), GroupSpec::product({6, 3}), GroupSpec::product({2, 4}),
                      GroupSpec::field_additive(9)}) {
        Group g(spec);
        CHECK(automorphisms(g).size() == brute_force_aut_count_2d(g));
    }
    // GL(2,3) and GL(3,2)
    CHECK(automorphisms(Group(GroupSpec::field_additive(9))).size() == 48);
    CHECK(automorphisms(Group(GroupSpec::field_additive(8))).size() == 168);
}

TEST_CASE("inverse and identity")
{
    Group g(GroupSpec::product({6, 2}));
    for (const auto& a : automorphisms(g)) {
        auto inv = a.inverse();
        for (std::uint32_t x = 0; x < g.order(); ++x)
            CHECK(inv(a(Element{x})) == Element{x});
    }
    CHECK(automorphisms(g).front().is_identity());
}

TEST_CASE("orbit minima")
{
    Group g(GroupSpec::cyclic(12));
    auto mins = automorphism_orbit_minima(g);
    for (std::uint32_t x = 0; x < 12; ++x)
        CHECK(mins[x].index == std::gcd(x, 12u) % 12);
}

TEST_CASE("unsupported groups")
{
    CHECK_THROWS_AS(automorphisms(Group(GroupSpec::dihedral(28))), UnsupportedError);
    CHECK_THROWS_AS(automorphisms(Group(GroupSpec::cyclic(6000))), UnsupportedError);
}
