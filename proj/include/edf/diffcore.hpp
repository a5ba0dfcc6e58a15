#pragma once

#include "edf/digraph.hpp"
#include "edf/groups.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace edf {

/// Ordered tuple of subsets (A_0, ..., A_{m-1}) of a group. Element order
/// inside a set is preserved as given; set semantics apply for comparisons.
struct SetFamily {
    std::vector<ElementSet> sets;

    std::size_t size() const noexcept { return sets.size(); }
    const ElementSet& operator[](std::size_t i) const { return sets[i]; }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

/// Copy with every set sorted ascending; used for order-insensitive comparison.
SetFamily sorted_sets(SetFamily fam);

/// Element -> multiplicity, stored as a count array over canonical indices.
class DifferenceMultiset {
public:
    explicit DifferenceMultiset(std::uint32_t group_order = 0) : counts_(group_order, 0) {}

    void add(Element x, std::uint32_t times = 1)
    {
        counts_[x.index] += times;
        total_ += times;
    }
    std::uint32_t count(Element x) const { return counts_[x.index]; }
    std::uint64_t total() const noexcept { return total_; }
    std::span<const std::uint32_t> counts() const noexcept { return counts_; }
    std::uint32_t group_order() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }

    /// Largest multiplicity among non-identity elements (0 if none).
    std::uint32_t max_nonidentity_count() const;

    DifferenceMultiset& operator+=(const DifferenceMultiset& other);

    friend bool operator==(const DifferenceMultiset&, const DifferenceMultiset&) = default;

private:
    std::vector<std::uint32_t> counts_;
    std::uint64_t total_ = 0;
};

/// Delta(A, B) = { a - b : a in A, b in B } (a * b^-1 in non-abelian groups).
DifferenceMultiset external_difference(const Group& g, std::span<const Element> a, std::span<const Element> b);

/// Rows indexed by A, columns by B, entry a - b, in the given element orders.
std::vector<std::vector<Element>> subtraction_table(const Group& g, std::span<const Element> a,
                                                    std::span<const Element> b);

/// Delta(A) = { x - y : x != y in A }.
DifferenceMultiset internal_difference(const Group& g, std::span<const Element> a);
std::uint32_t max_internal_multiplicity(const Group& g, std::span<const Element> a);

/// Union over edges (i,j) of H of Delta(A_j, A_i).
DifferenceMultiset edf_multiset(const Group& g, const LabelledDigraph& h, const SetFamily& fam);

enum class DisjointMode { disjoint, adjacent_disjoint };

struct Witness {
    Element element;
    std::uint32_t expected = 0;
    std::uint32_t actual = 0;
};

struct VerificationReport {
    bool verified = false;
    /// Set when the multiset was uniform on non-identity elements (or the
    /// expected value when one was requested).
    std::optional<std::uint32_t> lambda;
    std::vector<Witness> witnesses;
    std::uint32_t identity_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> disjointness_violations;
    std::vector<std::string> notes;

    explicit operator bool() const noexcept { return verified; }
    std::string summary(const Group& g) const;
};

inline constexpr std::size_t max_witnesses = 10;

struct VerifyOptions {
    std::optional<std::uint32_t> expected_lambda;
    DisjointMode mode = DisjointMode::disjoint;
    /// Permit unequal set sizes (GEDF / GSEDF).
    bool allow_nonuniform = false;
};

/// Checks that (A_0..A_{m-1}) is an (n,m,l,lambda;H)-EDF. When no lambda is
/// expected it is inferred from the multiplicity of element index 1.
/// Throws std::invalid_argument on a family/digraph size mismatch, repeated
/// elements inside a set, or unequal set sizes when those are not allowed.
VerificationReport verify_h_edf(const Group& g, const LabelledDigraph& h, const SetFamily& fam,
                                const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// Classical variants expressed through digraphs.

enum class VariantKind { edf, sedf, gedf, gsedf, cedf, scedf };

struct Variant {
    VariantKind kind = VariantKind::edf;
    std::uint32_t c = 1; // shift for cedf / scedf
};

/// Parses edf, sedf, gedf, gsedf, cedf[:c], scedf[:c].
Variant parse_variant(std::string_view text);
std::string to_string(const Variant& v);

/// One digraph check: vertex v of the digraph carries set vertex_to_set[v].
struct VariantCheck {
    LabelledDigraph digraph;
    std::vector<std::uint32_t> vertex_to_set;
};

std::vector<VariantCheck> variant_digraphs(const Variant& variant, std::uint32_t m);

/// (A_{map[0]}, A_{map[1]}, ...).
SetFamily select_sets(const SetFamily& fam, std::span<const std::uint32_t> vertex_to_set);

struct VariantReport {
    bool verified = false;
    /// Common lambda of all checks, when they agree.
    std::optional<std::uint32_t> lambda;
    std::vector<VerificationReport> checks;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> disjointness_violations;

    explicit operator bool() const noexcept { return verified; }
};

/// Runs every check of variant_digraphs plus pairwise disjointness of the whole
/// family. gsedf accepts a different lambda per check; all others require one.
VariantReport verify_variant(const Group& g, const SetFamily& fam, const Variant& variant,
                             std::optional<std::uint32_t> expected_lambda = std::nullopt);

/// The gcd(c, m) index cycles (j, j+c, j+2c, ...) mod m, j = 0..d-1.
std::vector<std::vector<std::uint32_t>> decompose_c_cedf(std::uint32_t m, std::uint32_t c);

// ---------------------------------------------------------------------------
// Directed <-> undirected transfer.

/// Delta(A_i, A_j) == Delta(A_j, A_i) for every edge {i,j} of the edge-symmetric H.
bool check_symmetric_pairs(const Group& g, const LabelledDigraph& h, const SetFamily& fam);

/// Verifies the orientation at lambda/2, where lambda comes from H. Fails
/// (with a note) unless the pairs are symmetric and lambda is even.
VerificationReport orient_halving(const Group& g, const LabelledDigraph& h, const SetFamily& fam,
                                  const LabelledDigraph& orientation);

/// Verifies fam on the underlying undirected graph of the oriented H*; when fam
/// verifies on H* at lambda the undirected check expects 2*lambda.
VerificationReport double_to_undirected(const Group& g, const LabelledDigraph& oriented, const SetFamily& fam,
                                        DisjointMode mode = DisjointMode::disjoint);

} // namespace edf
