#pragma once

#include "edf/diffcore.hpp"
#include "edf/family_file.hpp"
#include "edf/groups.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace testing {

inline edf::ElementSet elems(const edf::Group& g, std::initializer_list<const char*> tokens)
{
    edf::ElementSet out;
    for (auto t : tokens)
        out.push_back(g.parse_element(t));
    return out;
}

inline edf::ElementSet ints(std::initializer_list<std::uint32_t> values)
{
    edf::ElementSet out;
    for (auto v : values)
        out.push_back(edf::Element{v});
    return out;
}

inline edf::SetFamily family(std::initializer_list<std::initializer_list<std::uint32_t>> sets)
{
    edf::SetFamily fam;
    for (auto s : sets)
        fam.sets.push_back(ints(s));
    return fam;
}

inline edf::ElementSet sorted(edf::ElementSet s)
{
    std::sort(s.begin(), s.end());
    return s;
}

// Double loop through compose/inverse, independent of the count-array path.
inline std::map<std::uint32_t, std::uint32_t> naive_multiset(const edf::Group& g, const edf::LabelledDigraph& h,
                                                             const edf::SetFamily& fam)
{
    std::map<std::uint32_t, std::uint32_t> out;
    for (const auto& e : h.edges())
        for (auto a : fam[e.to])
            for (auto b : fam[e.from])
                ++out[g.compose(a, g.inverse(b)).index];
    return out;
}

inline std::map<std::uint32_t, std::uint32_t> as_map(const edf::DifferenceMultiset& ms)
{
    std::map<std::uint32_t, std::uint32_t> out;
    for (std::uint32_t i = 0; i < ms.group_order(); ++i)
        if (ms.counts()[i] != 0)
            out[i] = ms.counts()[i];
    return out;
}

inline std::string data_path(const std::string& name)
{
    return std::string(EDF_TEST_DATA_DIR) + "/" + name;
}

inline edf::FamilyFile load(const std::string& name)
{
    return edf::read_family_file(data_path(name));
}

} // namespace testing
