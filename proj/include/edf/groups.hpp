#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edf {

/// A group element, identified by its canonical index in [0, order).
/// Index 0 is always the identity.
struct Element {
    std::uint32_t index = 0;

    constexpr Element() = default;
    constexpr explicit Element(std::uint32_t i) : index(i) {}

    friend constexpr auto operator<=>(Element, Element) = default;
};

using ElementSet = std::vector<Element>;

enum class GroupKind { cyclic, product, field_additive, dihedral };

/// Description of one of the supported finite groups.
///
///   cyclic(n)          Z_n
///   product(n1..nk)    Z_n1 x ... x Z_nk, first coordinate most significant
///   field_additive(q)  (GF(q), +), element index sum c_i p^i
///   dihedral(2n)       <r, s : r^n = s^2 = 1, srs = r^-1>, index eps*n + i for s^eps r^i
struct GroupSpec {
    GroupKind kind = GroupKind::cyclic;
    std::vector<std::uint32_t> params;

    static GroupSpec cyclic(std::uint32_t n) { return {GroupKind::cyclic, {n}}; }
    static GroupSpec product(std::vector<std::uint32_t> moduli) { return {GroupKind::product, std::move(moduli)}; }
    static GroupSpec field_additive(std::uint32_t q) { return {GroupKind::field_additive, {q}}; }
    static GroupSpec dihedral(std::uint32_t order) { return {GroupKind::dihedral, {order}}; }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Parses "cyclic 13", "cyclic:13", "product 14 2", "product:14,2", "field 9", "dihedral 28".
GroupSpec parse_group_spec(std::string_view text);

/// Canonical text form, as used on the `group` line of family files ("product 14 2").
std::string to_string(const GroupSpec& spec);

/// Immutable handle for a finite group with canonically indexed elements.
class Group {
public:
    explicit Group(GroupSpec spec);

    const GroupSpec& spec() const noexcept { return spec_; }
    GroupKind kind() const noexcept { return spec_.kind; }
    std::uint32_t order() const noexcept { return order_; }
    bool is_abelian() const noexcept;

    Element identity() const noexcept { return Element{0}; }
    bool contains(Element a) const noexcept { return a.index < order_; }

    Element compose(Element a, Element b) const;
    Element inverse(Element a) const;

    /// a - b in abelian groups, a * b^-1 otherwise. difference(a, a) is the identity.
    Element difference(Element a, Element b) const;

    std::uint32_t element_order(Element a) const;

    /// Kind-specific coordinates: residue; residue tuple; p-ary coefficients
    /// c0..c(k-1); or the dihedral pair (eps, i).
    std::vector<std::uint32_t> decode(Element a) const;
    Element encode(std::span<const std::uint32_t> coords) const;

    /// Moduli of the coordinates returned by decode (for dihedral: {2, n}).
    const std::vector<std::uint32_t>& coordinate_moduli() const noexcept { return moduli_; }

    std::string format(Element a) const;
    Element parse_element(std::string_view token) const;

    void for_each(const std::function<void(Element)>& fn) const;

    friend bool operator==(const Group& a, const Group& b) { return a.spec_ == b.spec_; }

private:
    void check(Element a) const;

    GroupSpec spec_;
    std::uint32_t order_ = 1;
    std::vector<std::uint32_t> moduli_;
};

} // namespace edf
