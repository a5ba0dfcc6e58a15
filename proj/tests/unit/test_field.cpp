#include "edf/field.hpp"
#include "edf/number_theory.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace edf;

namespace {

// multiplicative order by repeated multiplication
std::uint32_t mult_order(const FieldTable& f, Element a)
{
    Element x = a;
    std::uint32_t k = 1;
    while (x != f.one()) {
        x = f.mul(x, a);
        ++k;
    }
    return k;
}

} // namespace

TEST_CASE("field tables satisfy the field axioms on small orders")
{
    for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u, 16u, 25u, 27u}) {
        FieldTable f(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.mul(Element{a}, Element{b}) == f.mul(Element{b}, Element{a}));
                for (std::uint32_t c = 0; c < q; c += 3)
                    CHECK(f.mul(Element{a}, f.add(Element{b}, Element{c})) ==
                          f.add(f.mul(Element{a}, Element{b}), f.mul(Element{a}, Element{c})));
            }
            if (a)
                CHECK(f.mul(Element{a}, f.inv(Element{a})) == f.one());
        }
    }
}

TEST_CASE("primitive element agrees with brute-force multiplicative order")
{
    for (std::uint32_t q : {5u, 7u, 13u, 19u, 49u, 64u, 81u, 243u}) {
        FieldTable f(q);
        CHECK(mult_order(f, f.primitive()) == q - 1);
        for (std::uint32_t a = 1; a < q; ++a)
            CHECK(f.is_primitive(Element{a}) == (mult_order(f, Element{a}) == q - 1));
        // first primitive in index order
        for (std::uint32_t a = 1; a < f.primitive().index; ++a)
            CHECK(mult_order(f, Element{a}) != q - 1);
    }
}

TEST_CASE("modulus is the smallest monic irreducible")
{
    FieldTable f4(4);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1}); // x^2 + x + 1
    FieldTable f9(9);
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0}); // x^2 + 1
    FieldTable f8(8);
    CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0}); // x^3 + x + 1
}

TEST_CASE("cyclotomic classes of GF(13) with primitive 2")
{
    FieldTable f(13);
    CHECK(f.primitive() == Element{2});
    auto c = cyclotomic_classes(f, 3);
    REQUIRE(c.size() == 3);
    CHECK(testing::sorted(c[0]) == testing::ints({1, 5, 8, 12}));
    CHECK(testing::sorted(c[1]) == testing::ints({2, 3, 10, 11}));
    CHECK(testing::sorted(c[2]) == testing::ints({4, 6, 7, 9}));
    CHECK(c[0] == testing::ints({1, 8, 12, 5})); // listed in exponent order
    CHECK_THROWS(cyclotomic_class(f, 5, 0));
}

TEST_CASE("order-6 classes of GF(19)")
{
    FieldTable f(19);
    CHECK(f.primitive() == Element{2});
    CHECK(testing::sorted(cyclotomic_class(f, 6, 0)) == testing::ints({1, 7, 11}));
    CHECK(testing::sorted(cyclotomic_class(f, 6, 2)) == testing::ints({4, 6, 9}));
    CHECK(testing::sorted(cyclotomic_class(f, 6, 4)) == testing::ints({5, 16, 17}));
}

TEST_CASE("classes partition the multiplicative group")
{
    for (std::uint32_t q : {16u, 31u, 121u, 243u}) {
        FieldTable f(q);
        for (auto e : divisors(q - 1)) {
            if (e < 2)
                continue;
            std::set<std::uint32_t> seen;
            for (const auto& cls : cyclotomic_classes(f, e)) {
                CHECK(cls.size() == (q - 1) / e);
                for (auto x : cls)
                    CHECK(seen.insert(x.index).second);
            }
            CHECK(seen.size() == q - 1);
        }
    }
}

TEST_CASE("-1 in C0 matches a direct membership check")
{
    for (std::uint32_t q : {13u, 17u, 19u, 25u, 27u, 49u}) {
        FieldTable f(q);
        for (auto e : divisors(q - 1)) {
            if (e < 2)
                continue;
            auto c0 = cyclotomic_class(f, e, 0);
            const bool member = std::find(c0.begin(), c0.end(), f.neg(f.one())) != c0.end();
            CHECK(minus_one_in_c0(q, e) == member);
        }
    }
}

TEST_CASE("explicit primitive element")
{
    FieldTable f(13, Element{6});
    CHECK(f.primitive() == Element{6});
    CHECK_THROWS(FieldTable(13, Element{3}));
}
