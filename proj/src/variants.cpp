#include "edf/diffcore.hpp"
#include "edf/errors.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace edf {

Variant parse_variant(std::string_view text)
{
    auto colon = text.find(':');
    auto name = text.substr(0, colon);
    Variant v;
    if (name == "edf")
        v.kind = VariantKind::edf;
    else if (name == "sedf")
        v.kind = VariantKind::sedf;
    else if (name == "gedf")
        v.kind = VariantKind::gedf;
    else if (name == "gsedf")
        v.kind = VariantKind::gsedf;
    else if (name == "cedf")
        v.kind = VariantKind::cedf;
    else if (name == "scedf")
        v.kind = VariantKind::scedf;
    else
        throw ParseError("unknown variant '" + std::string(text) + "'");
    if (colon != std::string_view::npos) {
        if (v.kind != VariantKind::cedf && v.kind != VariantKind::scedf)
            throw ParseError("only cedf and scedf take a shift parameter");
        auto arg = text.substr(colon + 1);
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v.c);
        if (arg.empty() || ec != std::errc{} || ptr != arg.data() + arg.size())
            throw ParseError("bad shift in variant '" + std::string(text) + "'");
    }
    return v;
}

std::string to_string(const Variant& v)
{
    switch (v.kind) {
    case VariantKind::edf: return "edf";
    case VariantKind::sedf: return "sedf";
    case VariantKind::gedf: return "gedf";
    case VariantKind::gsedf: return "gsedf";
    case VariantKind::cedf: return "cedf:" + std::to_string(v.c);
    case VariantKind::scedf: return "scedf:" + std::to_string(v.c);
    }
    return {};
}

std::vector<VariantCheck> variant_digraphs(const Variant& variant, std::uint32_t m)
{
    if (m < 2)
        throw std::invalid_argument("variants need at least two sets");
    std::vector<VariantCheck> out;
    std::vector<std::uint32_t> identity(m);
    std::iota(identity.begin(), identity.end(), 0u);

    switch (variant.kind) {
    case VariantKind::edf:
    case VariantKind::gedf:
        out.push_back({complete_digraph(m), identity});
        break;
    case VariantKind::sedf:
    case VariantKind::gsedf:
        for (std::uint32_t i = 0; i < m; ++i) {
            std::vector<std::uint32_t> map;
            for (std::uint32_t j = 0; j < m; ++j)
                if (j != i)
                    map.push_back(j);
            map.push_back(i);
            out.push_back({star_oriented(m), std::move(map)});
        }
        break;
    case VariantKind::cedf: {
        if (variant.c < 1 || variant.c >= m)
            throw std::invalid_argument("cedf shift must lie in 1..m-1");
        auto cycles = decompose_c_cedf(m, variant.c);
        std::vector<std::uint32_t> map;
        for (const auto& cyc : cycles)
            map.insert(map.end(), cyc.begin(), cyc.end());
        if (cycles.size() == 1) {
            out.push_back({oriented_cycle(m), std::move(map)});
        } else {
            std::vector<LabelledDigraph> parts(cycles.size(), oriented_cycle(m / static_cast<std::uint32_t>(cycles.size())));
            out.push_back({disjoint_union(parts), std::move(map)});
        }
        break;
    }
    case VariantKind::scedf:
        if (variant.c < 1 || variant.c >= m)
            throw std::invalid_argument("scedf shift must lie in 1..m-1");
        for (std::uint32_t i = 0; i < m; ++i)
            out.push_back({complete_bipartite_oriented(1, 1), {i, (i + variant.c) % m}});
        break;
    }
    return out;
}

SetFamily select_sets(const SetFamily& fam, std::span<const std::uint32_t> vertex_to_set)
{
    SetFamily out;
    for (auto idx : vertex_to_set) {
        if (idx >= fam.size())
            throw std::invalid_argument("vertex map refers to a missing set");
        out.sets.push_back(fam[idx]);
    }
    return out;
}

VariantReport verify_variant(const Group& g, const SetFamily& fam, const Variant& variant,
                             std::optional<std::uint32_t> expected_lambda)
{
    const bool generalised = variant.kind == VariantKind::gedf || variant.kind == VariantKind::gsedf;
    const auto m = static_cast<std::uint32_t>(fam.size());

    // Whole-family disjointness through one complete-digraph pass.
    VariantReport report;
    VerifyOptions all_pairs;
    all_pairs.allow_nonuniform = generalised;
    report.disjointness_violations =
        verify_h_edf(g, LabelledDigraph(m, {}), fam, all_pairs).disjointness_violations;

    VerifyOptions opts;
    opts.expected_lambda = expected_lambda;
    opts.allow_nonuniform = generalised;
    bool all_verified = true;
    std::optional<std::uint32_t> common;
    bool agree = true;
    for (const auto& check : variant_digraphs(variant, m)) {
        auto r = verify_h_edf(g, check.digraph, select_sets(fam, check.vertex_to_set), opts);
        if (!r.verified) {
            all_verified = false;
        } else if (!common) {
            common = r.lambda;
        } else if (*common != *r.lambda) {
            agree = false;
        }
        report.checks.push_back(std::move(r));
    }
    report.verified = all_verified && report.disjointness_violations.empty() &&
                      (agree || variant.kind == VariantKind::gsedf);
    if (all_verified && agree)
        report.lambda = common;
    return report;
}

} // namespace edf
