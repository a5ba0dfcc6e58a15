#include "edf/constructions.hpp"

#include "edf/field.hpp"
#include "edf/number_theory.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace edf {

namespace {

std::string tuple_text(std::initializer_list<std::uint32_t> values)
{
    std::string out;
    for (auto v : values)
        out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
}

std::string join(const std::vector<std::uint32_t>& values)
{
    std::string out;
    for (auto v : values)
        out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
}

// Re-verifies on the result's own digraph and declared lambda.
ConstructionResult finish(ConstructionResult r)
{
    VerifyOptions opts;
    opts.expected_lambda = r.params.lambda;
    auto report = verify_h_edf(r.group, r.digraph, r.family, opts);
    if (!report.verified)
        throw std::logic_error(r.provenance + " produced a family that does not verify: " + report.summary(r.group));
    r.reports.push_back(std::move(report));
    return r;
}

ConstructionResult finish_variant(ConstructionResult r, std::optional<std::uint32_t> expected)
{
    auto vr = verify_variant(r.group, r.family, *r.variant, expected);
    if (!vr.verified)
        throw std::logic_error(r.provenance + " produced a family that fails its variant check");
    for (auto& c : vr.checks) {
        r.strong_lambdas.push_back(*c.lambda);
        r.reports.push_back(std::move(c));
    }
    return r;
}

struct Cyclotomy {
    FieldTable field;
    std::uint32_t f;
    std::vector<ElementSet> classes;
};

Cyclotomy cyclotomy(std::uint32_t q, std::uint32_t e)
{
    if (!prime_power(q))
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (e < 2 || (q - 1) % e != 0)
        throw std::invalid_argument("e = " + std::to_string(e) + " must be at least 2 and divide q-1 = " +
                                    std::to_string(q - 1));
    FieldTable field(q);
    auto classes = cyclotomic_classes(field, e);
    return {std::move(field), (q - 1) / e, std::move(classes)};
}

ConstructionResult cyclotomic_base(std::uint32_t q, std::uint32_t e, LabelledDigraph h, std::uint32_t lambda,
                                   std::string provenance)
{
    auto c = cyclotomy(q, e);
    ConstructionResult r{Group(GroupSpec::field_additive(q)), SetFamily{std::move(c.classes)}, std::move(h),
                         {q, e, c.f, lambda}, {}, {}, std::nullopt, std::move(provenance), {}, {}};
    return finish(std::move(r));
}

} // namespace

std::string ConstructionResult::label() const
{
    if (variant && variant->kind == VariantKind::gsedf) {
        std::vector<std::uint32_t> sizes;
        for (const auto& s : family.sets)
            sizes.push_back(static_cast<std::uint32_t>(s.size()));
        return "(" + tuple_text({params.n, params.m}) + ";" + join(sizes) + ";" + join(strong_lambdas) + ")-GSEDF";
    }
    const auto head = tuple_text({params.n, params.m, params.l, params.lambda});
    if (variant && variant->kind == VariantKind::sedf)
        return "(" + head + ")-SEDF";
    if (digraph.kind() == DigraphKind::oriented_cycle)
        return "(" + head + ")-CEDF";
    if (digraph.kind() == DigraphKind::complete)
        return "(" + head + ")-EDF";
    return "(" + head + ";" + digraph.spec() + ")-EDF";
}

ConstructionResult cyclotomic_edf(std::uint32_t q, std::uint32_t e)
{
    if (e < 2 || q < 3 || (q - 1) % e != 0)
        throw std::invalid_argument("e must be at least 2 and divide q-1");
    const std::uint32_t f = (q - 1) / e;
    return cyclotomic_base(q, e, complete_digraph(e), (e - 1) * f, "cyclotomic classes on K_e");
}

ConstructionResult cyclotomic_cedf(std::uint32_t q, std::uint32_t e)
{
    if (e < 2 || q < 3 || (q - 1) % e != 0)
        throw std::invalid_argument("e must be at least 2 and divide q-1");
    return cyclotomic_base(q, e, oriented_cycle(e), (q - 1) / e, "cyclotomic classes on C_e^*");
}

ConstructionResult tournament_edf(std::uint32_t q, std::uint32_t e, const std::vector<bool>& orientation)
{
    if (e < 2 || q < 3 || (q - 1) % e != 0)
        throw std::invalid_argument("e must be at least 2 and divide q-1");
    if (e % 2 == 0 && (q - 1) % (2 * e) != 0)
        throw std::invalid_argument("tournament construction needs e odd or q = 1 mod 2e (q=" + std::to_string(q) +
                                    ", e=" + std::to_string(e) + ")");
    const std::uint32_t f = (q - 1) / e;
    return cyclotomic_base(q, e, tournament(e, orientation), (e - 1) * f / 2, "cyclotomic classes on a tournament");
}

ConstructionResult noncyclic_cedf(std::uint32_t l)
{
    if (l % 4 != 3)
        throw std::invalid_argument("noncyclic construction needs l = 3 mod 4");
    const std::int64_t half = (3 * std::int64_t{l} * l + 1) / 2;
    const std::int64_t z = 3 * (std::int64_t{l} - 1) * (l - 1) / 4;
    const std::int64_t ll = l;
    Group g(GroupSpec::product({static_cast<std::uint32_t>(half), 2}));
    auto elem = [&](std::int64_t x, std::int64_t y) {
        const std::uint32_t c[2] = {static_cast<std::uint32_t>(((x % half) + half) % half),
                                    static_cast<std::uint32_t>(((y % 2) + 2) % 2)};
        return g.encode(c);
    };
    SetFamily fam;
    fam.sets.resize(3);
    for (std::int64_t i = 0; i < ll; ++i) {
        fam.sets[0].push_back(elem(i, 0));
        fam.sets[1].push_back(elem(z * (i - 1) - ll - i, i + 1));
        fam.sets[2].push_back(elem(z * i - ll, i));
    }
    ConstructionResult r{g,  std::move(fam), oriented_cycle(3), {g.order(), 3, l, 1}, {}, {}, std::nullopt,
                         "non-cyclic abelian CEDF", {}, {}};
    return finish(std::move(r));
}

ConstructionResult m4_cedf(std::uint32_t l, std::uint32_t d)
{
    if (l < 1 || d < 1 || l % d != 0)
        throw std::invalid_argument("m4 construction needs d to divide l");
    const std::uint32_t n = 4 * l * l + 1;
    const std::uint32_t block = l * l / d;
    Group g(GroupSpec::cyclic(n));
    SetFamily fam;
    fam.sets.resize(4);
    for (std::uint32_t i = 0; i < l; ++i) {
        fam.sets[0].push_back(Element{i});
        fam.sets[2].push_back(Element{block + i});
    }
    for (std::uint32_t k = 0; k < d; ++k) {
        for (std::uint32_t i = 0; i < l / d; ++i) {
            const std::uint32_t x = block * (2 * k + 1) + (i + 1) * l;
            fam.sets[1].push_back(Element{x});
            fam.sets[3].push_back(Element{(x + 2 * l * l) % n});
        }
    }
    ConstructionResult r{g, std::move(fam), oriented_cycle(4), {n, 4, l, 1}, {}, {}, std::nullopt,
                         "cyclic m=4 CEDF (d=" + std::to_string(d) + ")", {}, {}};
    return finish(std::move(r));
}

ConstructionResult gsedf_two_set(std::uint32_t k1, std::uint32_t k2)
{
    if (k1 < 1 || k2 < 1)
        throw std::invalid_argument("two-set GSEDF needs k1, k2 >= 1");
    const std::uint32_t n = k1 * k2 + 1;
    SetFamily fam;
    fam.sets.resize(2);
    for (std::uint32_t i = 0; i < k1; ++i)
        fam.sets[0].push_back(Element{i});
    for (std::uint32_t t = 1; t <= k2; ++t)
        fam.sets[1].push_back(Element{k1 * t});
    ConstructionResult r{Group(GroupSpec::cyclic(n)),
                         std::move(fam),
                         complete_bipartite_oriented(1, 1),
                         {n, 2, k1, 1},
                         {k1, k2},
                         {},
                         Variant{VariantKind::gsedf, 1},
                         "two-set GSEDF",
                         {},
                         {}};
    return finish_variant(std::move(r), 1);
}

ConstructionResult sedf_squares(std::uint32_t q)
{
    if (!prime_power(q))
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (q % 4 != 1)
        throw std::invalid_argument("squares/nonsquares SEDF needs q = 1 mod 4");
    auto c = cyclotomy(q, 2);
    for (auto& s : c.classes)
        std::sort(s.begin(), s.end());
    const std::uint32_t lambda = (q - 1) / 4;
    ConstructionResult r{Group(GroupSpec::field_additive(q)),
                         SetFamily{std::move(c.classes)},
                         complete_bipartite_oriented(1, 1),
                         {q, 2, (q - 1) / 2, lambda},
                         {},
                         {},
                         Variant{VariantKind::sedf, 1},
                         "squares and nonsquares SEDF",
                         {},
                         {}};
    return finish_variant(std::move(r), lambda);
}

namespace {

SetFamily kab_sets(std::uint32_t a, std::uint32_t b, std::uint32_t l, std::uint64_t seed)
{
    std::vector<std::uint32_t> left(l * a), right(l * b);
    for (std::uint32_t i = 0; i < l * a; ++i)
        left[i] = i;
    for (std::uint32_t t = 0; t < l * b; ++t)
        right[t] = (t + 1) * l * a;
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(left.begin(), left.end(), rng);
        std::shuffle(right.begin(), right.end(), rng);
    }
    SetFamily fam;
    auto cut = [&](const std::vector<std::uint32_t>& side, std::uint32_t blocks) {
        for (std::uint32_t k = 0; k < blocks; ++k) {
            ElementSet s;
            for (std::uint32_t i = 0; i < l; ++i)
                s.push_back(Element{side[k * l + i]});
            std::sort(s.begin(), s.end());
            fam.sets.push_back(std::move(s));
        }
    };
    cut(left, a);
    cut(right, b);
    return fam;
}

} // namespace

ConstructionResult kab_star_edf(std::uint32_t a, std::uint32_t b, std::uint32_t l, std::uint64_t seed)
{
    if (a < 1 || b < 1 || l < 1)
        throw std::invalid_argument("K*_{a,b} construction needs a, b, l >= 1");
    const std::uint32_t n = l * l * a * b + 1;
    ConstructionResult r{Group(GroupSpec::cyclic(n)), kab_sets(a, b, l, seed), complete_bipartite_oriented(a, b),
                         {n, a + b, l, 1}, {}, {}, std::nullopt, "K*_{a,b} from a two-set GSEDF", {}, {}};
    return finish(std::move(r));
}

ConstructionResult kab_undirected_edf(std::uint32_t a, std::uint32_t b, std::uint32_t l, std::uint64_t seed)
{
    if (a < 1 || b < 1 || l < 1)
        throw std::invalid_argument("K_{a,b} construction needs a, b, l >= 1");
    const std::uint32_t n = 2 * l * l * a * b + 1;
    ConstructionResult r{Group(GroupSpec::cyclic(n)), kab_sets(a, b, l, seed), complete_bipartite(a, b),
                         {n, a + b, l, 1}, {}, {}, std::nullopt, "K_{a,b} in the doubled cyclic group", {}, {}};
    return finish(std::move(r));
}

ConstructionResult cycle_non_cedf(std::uint32_t a, std::uint32_t b)
{
    if (a < 3 || b < 3 || a % 2 == 0 || b % 2 == 0)
        throw std::invalid_argument("cycle construction needs odd a, b > 1");
    const std::uint32_t q = 2 * a * b + 1;
    if (!prime_power(q))
        throw std::invalid_argument("2ab+1 = " + std::to_string(q) + " is not a prime power");
    auto c = cyclotomy(q, 2 * a);
    SetFamily fam;
    for (std::uint32_t i = 0; i < a; ++i)
        fam.sets.push_back(c.classes[2 * i]);
    Group g(GroupSpec::field_additive(q));
    ConstructionResult r{g,  std::move(fam), cycle(a), {q, a, b, b}, {}, {}, std::nullopt,
                         "even cyclotomic classes on C_a", {}, {}};
    r = finish(std::move(r));

    const auto forward = oriented_cycle(a);
    for (const auto& oriented : {forward, reverse(forward)}) {
        auto ms = edf_multiset(g, oriented, r.family);
        const Element first{1};
        std::optional<Element> second;
        for (std::uint32_t x = 2; x < q && !second; ++x)
            if (ms.count(Element{x}) != ms.count(first))
                second = Element{x};
        if (!second)
            throw std::logic_error("oriented multiset unexpectedly uniform");
        r.non_cedf.push_back({oriented, first, ms.count(first), *second, ms.count(*second)});
    }
    return r;
}

} // namespace edf
