#pragma once

#include "edf/automorphisms.hpp"
#include "edf/diffcore.hpp"
#include "edf/groups.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edf {

/// B_{(i+c) mod m} = sigma(A_i) + beta for every i. With `reversed`, A_i is
/// replaced by A_{(m-i) mod m} (the cyclic order run backwards).
struct EquivalenceWitness {
    Automorphism sigma;
    Element beta;
    std::uint32_t c = 0;
    bool reversed = false;
};

struct EquivalenceOptions {
    /// Skip rotations whose per-set internal-difference profiles disagree.
    bool fingerprint_prefilter = true;
    /// Also try the reversed cyclic order of A.
    bool try_reversed = false;
    std::uint32_t automorphism_bound = default_automorphism_bound;
};

struct EquivalenceResult {
    std::optional<EquivalenceWitness> witness;
    /// (sigma, beta, c[, reversed]) triples actually compared.
    std::uint64_t candidates_examined = 0;

    explicit operator bool() const noexcept { return witness.has_value(); }
};

/// Exhaustive search over automorphism, translation and rotation. An empty
/// result proves inequivalence. Throws UnsupportedError for groups without
/// automorphism enumeration and std::invalid_argument when m differs.
EquivalenceResult cedf_equivalent(const Group& g, const SetFamily& a, const SetFamily& b,
                                  const EquivalenceOptions& options = {});

/// The family B determined by the witness; sets come out sorted.
SetFamily apply_witness(const Group& g, const SetFamily& a, const EquivalenceWitness& w);

/// Witness mapping B back onto A.
EquivalenceWitness invert_witness(const Group& g, const EquivalenceWitness& w, std::uint32_t m);

/// Nonzero multiplicities of Delta(A), largest first.
using MultiplicityProfile = std::vector<std::uint32_t>;
/// One profile per set, sorted.
using Fingerprint = std::vector<MultiplicityProfile>;

MultiplicityProfile internal_profile(const Group& g, const ElementSet& a);
Fingerprint inequivalence_fingerprint(const Group& g, const SetFamily& fam);
/// Largest internal multiplicity of each set, in family order.
std::vector<std::uint32_t> max_multiplicities(const Group& g, const SetFamily& fam);

std::string describe(const Group& g, const EquivalenceWitness& w);

} // namespace edf
