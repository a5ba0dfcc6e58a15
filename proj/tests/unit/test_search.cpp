#include "edf/errors.hpp"
#include "edf/search.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace edf;

namespace {

std::set<std::vector<std::vector<std::uint32_t>>> as_set(const std::vector<SetFamily>& fams)
{
    std::set<std::vector<std::vector<std::uint32_t>>> out;
    for (const auto& f : fams) {
        std::vector<std::vector<std::uint32_t>> v;
        for (const auto& s : sorted_sets(f).sets) {
            auto& row = v.emplace_back();
            for (auto x : s)
                row.push_back(x.index);
        }
        out.insert(v);
    }
    return out;
}

SetFamily translate(const Group& g, const SetFamily& f, Element t)
{
    SetFamily out;
    for (const auto& s : f.sets) {
        ElementSet r;
        for (auto x : s)
            r.push_back(g.compose(x, t));
        out.sets.push_back(r);
    }
    return out;
}

} // namespace

TEST_CASE("oracle: single edge in Z_2")
{
    Group g(GroupSpec::cyclic(2));
    auto sols = brute_force_oracle(g, LabelledDigraph(2, {{0, 1}}), 1, 1);
    CHECK(as_set(sols) == as_set({testing::family({{0}, {1}}), testing::family({{1}, {0}})}));
    CHECK_THROWS(brute_force_oracle(Group(GroupSpec::cyclic(14)), oriented_cycle(3), 1, 1));
}

TEST_CASE("oracle contains the C_3 family in Z_13")
{
    Group g(GroupSpec::cyclic(13));
    auto sols = as_set(brute_force_oracle(g, cycle(3), 2, 2));
    CHECK(sols.count({{0, 6}, {1, 2}, {9, 12}}) == 1);
}

TEST_CASE("search without symmetry breaking equals the oracle")
{
    struct Case {
        GroupSpec spec;
        LabelledDigraph h;
        std::uint32_t l, lambda;
        DisjointMode mode;
    };
    std::vector<Case> cases = {
        {GroupSpec::cyclic(5), oriented_cycle(3), 1, 1, DisjointMode::disjoint},
        {GroupSpec::cyclic(13), cycle(3), 2, 2, DisjointMode::disjoint},
        {GroupSpec::cyclic(7), oriented_cycle(3), 2, 2, DisjointMode::disjoint},
        {GroupSpec::cyclic(9), complete_bipartite_oriented(1, 1), 2, 1, DisjointMode::disjoint},
        {GroupSpec::dihedral(10), oriented_cycle(3), 1, 1, DisjointMode::disjoint},
        {GroupSpec::product({2, 2}), complete_digraph(2), 1, 2, DisjointMode::disjoint},
        {GroupSpec::cyclic(5), oriented_cycle(4), 1, 1, DisjointMode::adjacent_disjoint},
    };
    for (const auto& c : cases) {
        Group g(c.spec);
        auto oracle = brute_force_oracle(g, c.h, c.l, c.lambda, c.mode);
        SearchOptions opts;
        opts.mode = c.mode;
        auto res = search_h_edf(g, c.h, c.l, c.lambda, opts);
        CHECK(res.certificate.exhausted);
        CHECK(as_set(res.solutions) == as_set(oracle));
        CHECK(res.solutions.size() == oracle.size());

        // translation breaking: every oracle solution is a translate of an emitted one
        opts.symmetry = SymmetryBreaking::translation;
        auto reduced = as_set(search_h_edf(g, c.h, c.l, c.lambda, opts).solutions);
        for (const auto& f : oracle) {
            bool found = false;
            for (std::uint32_t t = 0; t < g.order() && !found; ++t)
                found = reduced.count(*as_set({translate(g, f, Element{t})}).begin()) > 0;
            CHECK(found);
        }
    }
}

TEST_CASE("counting precondition")
{
    Group g(GroupSpec::cyclic(19));
    auto r = search_h_edf(g, oriented_cycle(4), 3, 3);
    CHECK(r.certificate.exhausted);
    CHECK_FALSE(r.certificate.counting_feasible);
    CHECK(r.certificate.nodes == 0);
    CHECK(r.solutions.empty());
}

TEST_CASE("C_5 in Z_11 at lambda 4")
{
    Group g(GroupSpec::cyclic(11));
    SearchOptions opts;
    opts.symmetry = SymmetryBreaking::translation;
    opts.max_solutions = 1;
    auto r = search_h_edf(g, cycle(5), 2, 4, opts);
    REQUIRE(r.solutions.size() == 1);
    CHECK(verify_h_edf(g, cycle(5), r.solutions[0], {4, DisjointMode::disjoint, false}).verified);
    CHECK(r.certificate.reason == StopReason::max_solutions);
    CHECK_FALSE(r.certificate.exhausted);
}

TEST_CASE("automorphism breaking keeps one representative per class")
{
    Group g(GroupSpec::cyclic(13));
    SearchOptions t, a;
    t.symmetry = SymmetryBreaking::translation;
    a.symmetry = SymmetryBreaking::automorphism;
    auto rt = search_h_edf(g, oriented_cycle(3), 2, 1, t);
    auto ra = search_h_edf(g, oriented_cycle(3), 2, 1, a);
    CHECK(ra.solutions.size() <= rt.solutions.size());
    CHECK(!ra.solutions.empty() == !rt.solutions.empty());
    // every translation-reduced solution maps under some unit to an emitted one
    auto reps = as_set(ra.solutions);
    for (const auto& f : rt.solutions) {
        bool found = false;
        for (std::uint32_t u = 1; u < 13 && !found; ++u) {
            for (std::uint32_t t0 = 0; t0 < 13 && !found; ++t0) {
                SetFamily img;
                for (const auto& s : f.sets) {
                    ElementSet r;
                    for (auto x : s)
                        r.push_back(Element{(u * x.index + t0) % 13});
                    img.sets.push_back(r);
                }
                found = reps.count(*as_set({img}).begin()) > 0;
            }
        }
        CHECK(found);
    }
    CHECK_THROWS_AS(search_h_edf(Group(GroupSpec::dihedral(10)), oriented_cycle(3), 1, 1, a), UnsupportedError);
}

TEST_CASE("threads and seeds do not change the solution set")
{
    Group g(GroupSpec::cyclic(13));
    SearchOptions base;
    base.symmetry = SymmetryBreaking::translation;
    auto ref = as_set(search_h_edf(g, cycle(3), 2, 2, base).solutions);
    SearchOptions par = base;
    par.threads = 3;
    par.seed = 42;
    CHECK(as_set(search_h_edf(g, cycle(3), 2, 2, par).solutions) == ref);
}

TEST_CASE("time budget gives a partial certificate")
{
    Group g(GroupSpec::cyclic(19));
    SearchOptions opts;
    opts.time_budget = 0.0;
    auto r = search_h_edf(g, oriented_cycle(4), 3, 2, opts);
    CHECK_FALSE(r.certificate.exhausted);
    CHECK(r.certificate.reason == StopReason::time_budget);
    CHECK(r.certificate.summary().find("searched prefix up to node") != std::string::npos);
}
