#pragma once

#include "edf/diffcore.hpp"
#include "edf/digraph.hpp"
#include "edf/groups.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace edf {

/// Line-oriented family file:
///
///   # comment
///   group cyclic 13
///   digraph cycle*:3            (optional)
///   mode adjacent-disjoint      (optional)
///   variant sedf                (optional)
///   set 1 5 12 8
///   ...
///   end
struct FamilyFile {
    Group group{GroupSpec::cyclic(1)};
    std::optional<LabelledDigraph> digraph;
    DisjointMode mode = DisjointMode::disjoint;
    std::optional<Variant> variant;
    SetFamily family;
};

/// Throws ParseError carrying the line and column of the offending token.
FamilyFile parse_family_file(std::string_view text);
/// Reads and parses a file; I/O failures are reported as ParseError too.
FamilyFile read_family_file(const std::string& path);

std::string emit_family_file(const FamilyFile& file);
std::string emit_family_file(const Group& g, const SetFamily& fam,
                             const std::optional<LabelledDigraph>& digraph = std::nullopt,
                             DisjointMode mode = DisjointMode::disjoint,
                             const std::optional<Variant>& variant = std::nullopt);

} // namespace edf
