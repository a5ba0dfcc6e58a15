#include "edf/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

namespace edf {

MultiplicityProfile internal_profile(const Group& g, const ElementSet& a)
{
    MultiplicityProfile out;
    if (a.size() < 2)
        return out;
    auto d = internal_difference(g, a);
    for (auto c : d.counts())
        if (c != 0)
            out.push_back(c);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Fingerprint inequivalence_fingerprint(const Group& g, const SetFamily& fam)
{
    Fingerprint fp;
    for (const auto& s : fam.sets)
        fp.push_back(internal_profile(g, s));
    std::sort(fp.begin(), fp.end());
    return fp;
}

std::vector<std::uint32_t> max_multiplicities(const Group& g, const SetFamily& fam)
{
    std::vector<std::uint32_t> out;
    for (const auto& s : fam.sets) {
        auto p = internal_profile(g, s);
        out.push_back(p.empty() ? 0 : p.front());
    }
    return out;
}

namespace {

std::uint32_t source_index(std::uint32_t i, std::uint32_t m, bool reversed)
{
    return reversed ? (m - i) % m : i;
}

} // namespace

SetFamily apply_witness(const Group& g, const SetFamily& a, const EquivalenceWitness& w)
{
    const auto m = static_cast<std::uint32_t>(a.size());
    SetFamily out;
    out.sets.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        auto& dst = out.sets[(i + w.c) % m];
        for (Element x : a[source_index(i, m, w.reversed)])
            dst.push_back(g.compose(w.sigma(x), w.beta));
        std::sort(dst.begin(), dst.end());
    }
    return out;
}

EquivalenceWitness invert_witness(const Group& g, const EquivalenceWitness& w, std::uint32_t m)
{
    EquivalenceWitness inv;
    inv.sigma = w.sigma.inverse();
    inv.beta = g.inverse(inv.sigma(w.beta));
    inv.reversed = w.reversed;
    inv.c = w.reversed ? w.c % m : (m - w.c % m) % m;
    return inv;
}

EquivalenceResult cedf_equivalent(const Group& g, const SetFamily& a, const SetFamily& b,
                                  const EquivalenceOptions& options)
{
    if (a.size() != b.size())
        throw std::invalid_argument("families have different numbers of sets");
    const auto m = static_cast<std::uint32_t>(a.size());
    const std::uint32_t n = g.order();
    EquivalenceResult result;
    if (m == 0)
        return result;

    std::vector<std::vector<std::uint8_t>> in_b(m, std::vector<std::uint8_t>(n, 0));
    for (std::uint32_t j = 0; j < m; ++j)
        for (Element y : b[j])
            in_b[j][y.index] = 1;

    // Rotations (and orientations) that survive size and profile checks.
    std::vector<std::pair<bool, std::uint32_t>> layouts;
    std::vector<MultiplicityProfile> prof_a, prof_b;
    if (options.fingerprint_prefilter) {
        for (std::uint32_t i = 0; i < m; ++i) {
            prof_a.push_back(internal_profile(g, a[i]));
            prof_b.push_back(internal_profile(g, b[i]));
        }
    }
    for (bool rev : {false, true}) {
        if (rev && !options.try_reversed)
            break;
        for (std::uint32_t c = 0; c < m; ++c) {
            bool ok = true;
            for (std::uint32_t i = 0; i < m && ok; ++i) {
                const auto src = source_index(i, m, rev), dst = (i + c) % m;
                ok = a[src].size() == b[dst].size() &&
                     (!options.fingerprint_prefilter || prof_a[src] == prof_b[dst]);
            }
            if (ok || !options.fingerprint_prefilter)
                layouts.emplace_back(rev, c);
        }
    }

    std::vector<Element> moved;
    for_each_automorphism(
        g,
        [&](const Automorphism& sigma) {
            for (auto [rev, c] : layouts) {
                for (std::uint32_t beta = 0; beta < n; ++beta) {
                    ++result.candidates_examined;
                    bool ok = true;
                    for (std::uint32_t i = 0; i < m && ok; ++i) {
                        const auto& src = a[source_index(i, m, rev)];
                        const auto& mark = in_b[(i + c) % m];
                        if (src.size() != b[(i + c) % m].size()) {
                            ok = false;
                            break;
                        }
                        for (Element x : src) {
                            if (!mark[g.compose(sigma(x), Element{beta}).index]) {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if (ok) {
                        result.witness = EquivalenceWitness{sigma, Element{beta}, c, rev};
                        return false;
                    }
                }
            }
            return true;
        },
        options.automorphism_bound);
    return result;
}

std::string describe(const Group& g, const EquivalenceWitness& w)
{
    std::string out = "sigma=";
    if (w.sigma.unit) {
        out += "x->" + std::to_string(*w.sigma.unit) + "x";
    } else {
        out += "[";
        const auto& moduli = g.coordinate_moduli();
        std::uint32_t stride = 1;
        std::vector<std::string> imgs;
        // images of the unit coordinate vectors, last coordinate first
        for (std::size_t k = moduli.size(); k-- > 0;) {
            imgs.insert(imgs.begin(), g.format(w.sigma(Element{stride})));
            stride *= moduli[k];
        }
        if (g.kind() == GroupKind::field_additive) {
            imgs.clear();
            stride = 1;
            for (std::size_t k = 0; k < moduli.size(); ++k) {
                imgs.push_back(g.format(w.sigma(Element{stride})));
                stride *= moduli[k];
            }
        }
        for (std::size_t k = 0; k < imgs.size(); ++k)
            out += (k ? " " : "") + imgs[k];
        out += "]";
    }
    out += " beta=" + g.format(w.beta) + " c=" + std::to_string(w.c);
    if (w.reversed)
        out += " reversed";
    return out;
}

} // namespace edf
