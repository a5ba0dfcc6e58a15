#pragma once

#include "edf/groups.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace edf {

inline constexpr std::uint32_t default_automorphism_bound = 5000;

/// A group automorphism as an image table indexed by canonical element index.
struct Automorphism {
    std::vector<Element> image;
    /// Set for cyclic groups, where the map is x -> unit * x.
    std::optional<std::uint32_t> unit;

    Element operator()(Element x) const { return image[x.index]; }
    Automorphism inverse() const;
    bool is_identity() const;
};

/// Calls visit for every automorphism of g until it returns false.
/// Cyclic groups enumerate unit multipliers in ascending order; other abelian
/// groups enumerate generator images. Throws UnsupportedError for non-abelian
/// groups or orders above bound.
void for_each_automorphism(const Group& g, const std::function<bool(const Automorphism&)>& visit,
                           std::uint32_t bound = default_automorphism_bound);

std::vector<Automorphism> automorphisms(const Group& g, std::uint32_t bound = default_automorphism_bound);

/// For every element, the least index in its orbit under Aut(g).
std::vector<Element> automorphism_orbit_minima(const Group& g, std::uint32_t bound = default_automorphism_bound);

} // namespace edf
