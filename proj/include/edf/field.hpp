#pragma once

#include "edf/groups.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace edf {

/// Precomputed arithmetic for GF(q), q = p^k.
///
/// Elements share the canonical indexing of the additive group
/// field_additive(q): the element c0 + c1 x + ... + c(k-1) x^(k-1) has index
/// sum c_i p^i. For k > 1 the modulus is the lexicographically smallest monic
/// irreducible of degree k (ordered by (c(k-1), ..., c0)); the primitive element
/// is the first primitive one in index order unless given explicitly.
class FieldTable {
public:
    explicit FieldTable(std::uint32_t q);

    /// Same field with a caller-chosen primitive element. Throws if it is not primitive.
    FieldTable(std::uint32_t q, Element primitive);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return k_; }

    /// Low coefficients c0..c(k-1) of the monic modulus; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    Element primitive() const noexcept { return alpha_; }

    Group additive_group() const { return Group(GroupSpec::field_additive(q_)); }

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t e) const;

    /// Discrete log base the primitive element; a must be nonzero.
    std::uint32_t log(Element a) const;
    /// alpha^e, exponent taken mod q-1.
    Element exp(std::uint64_t e) const;

    bool is_primitive(Element a) const;

private:
    void build(std::optional<Element> primitive);
    Element slow_mul(Element a, Element b) const;

    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::vector<std::uint32_t> modulus_;
    Element alpha_{};
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    Group additive_;
};

/// Cyclotomic class C_i^e = { alpha^(e s + i) : 0 <= s < f }, f = (q-1)/e, listed in s order.
ElementSet cyclotomic_class(const FieldTable& field, std::uint32_t e, std::uint32_t i);

/// All classes C_0^e .. C_(e-1)^e.
std::vector<ElementSet> cyclotomic_classes(const FieldTable& field, std::uint32_t e);

/// Whether -1 lies in C_0^e of GF(q).
bool minus_one_in_c0(std::uint32_t q, std::uint32_t e);

} // namespace edf
