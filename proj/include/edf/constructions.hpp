#pragma once

#include "edf/diffcore.hpp"
#include "edf/digraph.hpp"
#include "edf/groups.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edf {

struct EdfParameters {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint32_t l = 0;
    std::uint32_t lambda = 0;
};

/// Evidence that a family is not a CEDF on a given oriented cycle: two
/// non-identity elements whose multiplicities differ.
struct NonUniformityCertificate {
    LabelledDigraph oriented;
    Element first;
    std::uint32_t first_count = 0;
    Element second;
    std::uint32_t second_count = 0;
};

struct ConstructionResult {
    Group group;
    SetFamily family;
    LabelledDigraph digraph;
    EdfParameters params;
    /// Set sizes when they are not uniform (generalised families).
    std::vector<std::uint32_t> set_sizes;
    /// Per-set lambda values for strong variants (GSEDF / SEDF).
    std::vector<std::uint32_t> strong_lambdas;
    std::optional<Variant> variant;
    std::string provenance;
    /// Every result is re-verified before it is returned.
    std::vector<VerificationReport> reports;
    /// Filled by cycle_non_cedf, one per orientation of the cycle.
    std::vector<NonUniformityCertificate> non_cedf;

    /// "(65,4,4,1)-CEDF", "(37,6,2,1;kab*:3,3)-EDF", "(37,2;6,6;1,1)-GSEDF", ...
    std::string label() const;
};

/// All e cyclotomic classes of GF(q) on K_e, lambda = (e-1) f.
ConstructionResult cyclotomic_edf(std::uint32_t q, std::uint32_t e);
/// The same classes on C_e^*, lambda = f (e = 2 uses the single undirected edge).
ConstructionResult cyclotomic_cedf(std::uint32_t q, std::uint32_t e);
/// Classes on an arbitrary tournament, lambda = (e-1) f / 2. Requires e odd
/// or q = 1 mod 2e.
ConstructionResult tournament_edf(std::uint32_t q, std::uint32_t e, const std::vector<bool>& orientation = {});

/// (3l^2+1, 3, l, 1)-CEDF in Z_{(3l^2+1)/2} x Z_2, l = 3 mod 4.
ConstructionResult noncyclic_cedf(std::uint32_t l);
/// (4l^2+1, 4, l, 1)-CEDF in Z_{4l^2+1} for a divisor d of l.
ConstructionResult m4_cedf(std::uint32_t l, std::uint32_t d);

/// {0..k1-1} and {k1, 2k1, ..., k1 k2} in Z_{k1 k2 + 1}: a (k1k2+1, 2; k1, k2; 1, 1)-GSEDF.
ConstructionResult gsedf_two_set(std::uint32_t k1, std::uint32_t k2);
/// Nonzero squares and nonsquares of GF(q), q = 1 mod 4: a (q, 2, (q-1)/2, (q-1)/4)-SEDF.
ConstructionResult sedf_squares(std::uint32_t q);

/// (l^2 ab + 1, a+b, l, 1; K*_{a,b})-EDF. Seed 0 gives consecutive blocks of
/// {0..la-1} and arithmetic-progression blocks of {la, 2la, ..., lb*la}; other
/// seeds shuffle both sides before blocking.
ConstructionResult kab_star_edf(std::uint32_t a, std::uint32_t b, std::uint32_t l, std::uint64_t seed = 0);
/// The same sets in Z_{2 l^2 ab + 1} on the undirected K_{a,b}.
ConstructionResult kab_undirected_edf(std::uint32_t a, std::uint32_t b, std::uint32_t l, std::uint64_t seed = 0);

/// Even cyclotomic classes (C_0^{2a}, C_2^{2a}, ...) of GF(2ab+1): a
/// (q, a, b, b; C_a)-EDF, with certificates that neither orientation of C_a is uniform.
ConstructionResult cycle_non_cedf(std::uint32_t a, std::uint32_t b);

} // namespace edf
