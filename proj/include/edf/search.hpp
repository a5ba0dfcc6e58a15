#pragma once

#include "edf/diffcore.hpp"
#include "edf/digraph.hpp"
#include "edf/groups.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace edf {

enum class SymmetryBreaking {
    none,
    /// identity in A_0
    translation,
    /// identity in A_0 and its smallest other element minimal under Aut(G)
    automorphism,
};

SymmetryBreaking parse_symmetry(std::string_view text);
std::string to_string(SymmetryBreaking s);

struct SearchOptions {
    DisjointMode mode = DisjointMode::disjoint;
    /// 0 means no limit.
    std::uint64_t max_solutions = 0;
    SymmetryBreaking symmetry = SymmetryBreaking::none;
    /// Seconds; unset means unlimited.
    std::optional<double> time_budget;
    unsigned threads = 1;
    /// Nonzero seeds shuffle the order of the top-level branches.
    std::uint64_t seed = 0;
};

enum class StopReason { exhausted, infeasible, max_solutions, time_budget };

struct SearchCertificate {
    /// The whole (quotiented) space was searched.
    bool exhausted = false;
    StopReason reason = StopReason::exhausted;
    bool counting_feasible = true;
    std::uint64_t nodes = 0;
    /// nodes[d] = number of partial families with d elements placed.
    std::vector<std::uint64_t> depth_histogram;
    std::string quotient;
    std::uint64_t solutions = 0;

    std::string summary() const;
};

struct SearchResult {
    std::vector<SetFamily> solutions;
    SearchCertificate certificate;
};

/// Depth-first search for (|G|, m, l, lambda; H)-EDFs. Sets are filled in vertex
/// order with ascending elements; each emitted family is re-verified. The
/// callback, if any, sees solutions as they are found (under a lock when
/// threads > 1).
SearchResult search_h_edf(const Group& g, const LabelledDigraph& h, std::uint32_t l, std::uint32_t lambda,
                          const SearchOptions& options = {},
                          const std::function<void(const SetFamily&)>& on_solution = {});

inline constexpr std::uint32_t oracle_max_order = 13;
inline constexpr std::uint32_t oracle_max_elements = 6;

/// Every family of sorted l-subsets that verifies, by plain enumeration.
/// Only for |G| <= 13 and m*l <= 6; throws std::invalid_argument otherwise.
std::vector<SetFamily> brute_force_oracle(const Group& g, const LabelledDigraph& h, std::uint32_t l,
                                          std::uint32_t lambda, DisjointMode mode = DisjointMode::disjoint);

} // namespace edf
