#include "edf/groups.hpp"

#include "edf/errors.hpp"
#include "edf/number_theory.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace edf {

namespace {

std::uint32_t parse_uint(std::string_view s, std::string_view what)
{
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" + std::string(s) + "'");
    return value;
}

std::vector<std::string_view> split_any(std::string_view text, std::string_view separators)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find_first_of(separators, pos);
        if (next == std::string_view::npos)
            next = text.size();
        if (next > pos)
            out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

} // namespace

GroupSpec parse_group_spec(std::string_view text)
{
    auto parts = split_any(text, " \t:,");
    if (parts.empty())
        throw ParseError("empty group specification");
    std::vector<std::uint32_t> params;
    for (std::size_t i = 1; i < parts.size(); ++i)
        params.push_back(parse_uint(parts[i], "group parameter"));

    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw ParseError("group kind '" + std::string(parts[0]) + "' takes " + std::to_string(count) + " parameter(s)");
    };
    auto kind = parts[0];
    if (kind == "cyclic") {
        need(1);
        return GroupSpec::cyclic(params[0]);
    }
    if (kind == "product") {
        if (params.empty())
            throw ParseError("group kind 'product' needs at least one modulus");
        return GroupSpec::product(params);
    }
    if (kind == "field") {
        need(1);
        return GroupSpec::field_additive(params[0]);
    }
    if (kind == "dihedral") {
        need(1);
        return GroupSpec::dihedral(params[0]);
    }
    throw ParseError("unknown group kind '" + std::string(kind) + "'");
}

std::string to_string(const GroupSpec& spec)
{
    std::string out;
    switch (spec.kind) {
    case GroupKind::cyclic: out = "cyclic"; break;
    case GroupKind::product: out = "product"; break;
    case GroupKind::field_additive: out = "field"; break;
    case GroupKind::dihedral: out = "dihedral"; break;
    }
    for (auto p : spec.params)
        out += " " + std::to_string(p);
    return out;
}

Group::Group(GroupSpec spec) : spec_(std::move(spec))
{
    const auto& p = spec_.params;
    switch (spec_.kind) {
    case GroupKind::cyclic:
        if (p.size() != 1 || p[0] < 1)
            throw std::invalid_argument("cyclic group order must be a positive integer");
        order_ = p[0];
        moduli_ = {p[0]};
        break;
    case GroupKind::product: {
        if (p.empty())
            throw std::invalid_argument("product group needs at least one factor");
        std::uint64_t order = 1;
        for (auto n : p) {
            if (n < 2)
                throw std::invalid_argument("product group factors must be at least 2");
            order *= n;
            if (order > UINT32_MAX)
                throw std::invalid_argument("product group order too large");
        }
        order_ = static_cast<std::uint32_t>(order);
        moduli_ = p;
        break;
    }
    case GroupKind::field_additive: {
        if (p.size() != 1)
            throw std::invalid_argument("field group takes one parameter q");
        auto pp = prime_power(p[0]);
        if (!pp)
            throw std::invalid_argument("field order " + std::to_string(p[0]) + " is not a prime power");
        order_ = p[0];
        moduli_.assign(pp->exponent, pp->prime);
        break;
    }
    case GroupKind::dihedral:
        if (p.size() != 1 || p[0] < 2 || p[0] % 2 != 0)
            throw std::invalid_argument("dihedral group order must be an even integer >= 2");
        order_ = p[0];
        moduli_ = {2, p[0] / 2};
        break;
    }
}

bool Group::is_abelian() const noexcept
{
    // D_2 and D_4 are the only abelian dihedral groups.
    if (spec_.kind == GroupKind::dihedral)
        return order_ <= 4;
    return true;
}

void Group::check(Element a) const
{
    if (a.index >= order_)
        throw std::out_of_range("element index " + std::to_string(a.index) + " out of range for group of order " +
                                std::to_string(order_));
}

std::vector<std::uint32_t> Group::decode(Element a) const
{
    check(a);
    std::vector<std::uint32_t> coords(moduli_.size());
    std::uint32_t x = a.index;
    if (spec_.kind == GroupKind::field_additive) {
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            coords[i] = x % moduli_[i];
            x /= moduli_[i];
        }
    } else {
        for (std::size_t i = moduli_.size(); i-- > 0;) {
            coords[i] = x % moduli_[i];
            x /= moduli_[i];
        }
    }
    return coords;
}

Element Group::encode(std::span<const std::uint32_t> coords) const
{
    if (coords.size() != moduli_.size())
        throw std::invalid_argument("wrong number of coordinates for group element");
    std::uint32_t x = 0;
    if (spec_.kind == GroupKind::field_additive) {
        for (std::size_t i = coords.size(); i-- > 0;) {
            if (coords[i] >= moduli_[i])
                throw std::out_of_range("coordinate out of range");
            x = x * moduli_[i] + coords[i];
        }
    } else {
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] >= moduli_[i])
                throw std::out_of_range("coordinate out of range");
            x = x * moduli_[i] + coords[i];
        }
    }
    return Element{x};
}

Element Group::compose(Element a, Element b) const
{
    check(a);
    check(b);
    switch (spec_.kind) {
    case GroupKind::cyclic: {
        std::uint32_t s = a.index + b.index;
        return Element{s >= order_ ? s - order_ : s};
    }
    case GroupKind::dihedral: {
        const std::uint32_t n = moduli_[1];
        const std::uint32_t ea = a.index / n, ia = a.index % n;
        const std::uint32_t eb = b.index / n, ib = b.index % n;
        // s^ea r^ia s^eb r^ib = s^(ea+eb) r^(+-ia + ib)
        const std::uint32_t rot = ((eb ? n - ia : ia) + ib) % n;
        return Element{((ea ^ eb) * n) + rot};
    }
    default: {
        auto ca = decode(a);
        auto cb = decode(b);
        for (std::size_t i = 0; i < ca.size(); ++i)
            ca[i] = (ca[i] + cb[i]) % moduli_[i];
        return encode(ca);
    }
    }
}

Element Group::inverse(Element a) const
{
    check(a);
    switch (spec_.kind) {
    case GroupKind::cyclic:
        return Element{a.index == 0 ? 0 : order_ - a.index};
    case GroupKind::dihedral: {
        const std::uint32_t n = moduli_[1];
        if (a.index >= n)
            return a; // reflections are involutions
        return Element{a.index == 0 ? 0 : n - a.index};
    }
    default: {
        auto c = decode(a);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = (moduli_[i] - c[i]) % moduli_[i];
        return encode(c);
    }
    }
}

Element Group::difference(Element a, Element b) const
{
    if (spec_.kind == GroupKind::cyclic) {
        check(a);
        check(b);
        return Element{a.index >= b.index ? a.index - b.index : a.index + order_ - b.index};
    }
    return compose(a, inverse(b));
}

std::uint32_t Group::element_order(Element a) const
{
    check(a);
    switch (spec_.kind) {
    case GroupKind::cyclic:
        return order_ / std::gcd(order_, a.index == 0 ? order_ : a.index);
    case GroupKind::dihedral: {
        const std::uint32_t n = moduli_[1];
        if (a.index == 0)
            return 1;
        if (a.index >= n)
            return 2;
        return n / std::gcd(n, a.index);
    }
    default: {
        std::uint32_t result = 1;
        auto c = decode(a);
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::uint32_t o = moduli_[i] / std::gcd(moduli_[i], c[i] == 0 ? moduli_[i] : c[i]);
            result = std::lcm(result, o);
        }
        return result;
    }
    }
}

std::string Group::format(Element a) const
{
    auto c = decode(a);
    std::string out;
    switch (spec_.kind) {
    case GroupKind::cyclic:
        return std::to_string(c[0]);
    case GroupKind::dihedral:
        return (c[0] ? "sr" : "r") + std::to_string(c[1]);
    case GroupKind::product:
        for (std::size_t i = 0; i < c.size(); ++i)
            out += (i ? "," : "") + std::to_string(c[i]);
        return out;
    case GroupKind::field_additive:
        if (c.size() == 1)
            return std::to_string(c[0]);
        for (std::size_t i = 0; i < c.size(); ++i)
            out += (i ? ":" : "") + std::to_string(c[i]);
        return out;
    }
    return out;
}

Element Group::parse_element(std::string_view token) const
{
    auto range_error = [&] {
        return ParseError("element '" + std::string(token) + "' out of range for group " + to_string(spec_));
    };
    switch (spec_.kind) {
    case GroupKind::cyclic: {
        auto v = parse_uint(token, "element");
        if (v >= order_)
            throw range_error();
        return Element{v};
    }
    case GroupKind::dihedral: {
        const std::uint32_t n = moduli_[1];
        std::string_view rest = token;
        std::uint32_t eps = 0;
        if (rest == "id" || rest == "e")
            return Element{0};
        if (!rest.empty() && rest.front() == 's') {
            eps = 1;
            rest.remove_prefix(1);
            if (rest.empty())
                return Element{n};
        }
        if (rest.empty() || rest.front() != 'r')
            throw ParseError("dihedral element must look like r3 or sr3, got '" + std::string(token) + "'");
        rest.remove_prefix(1);
        if (!rest.empty() && rest.front() == '^')
            rest.remove_prefix(1);
        std::uint32_t i = rest.empty() ? 1 : parse_uint(rest, "rotation exponent");
        if (i >= n)
            throw range_error();
        return Element{eps * n + i};
    }
    case GroupKind::product:
    case GroupKind::field_additive: {
        const char sep = spec_.kind == GroupKind::product ? ',' : ':';
        auto parts = split_any(token, std::string_view(&sep, 1));
        if (parts.size() != moduli_.size() || std::count(token.begin(), token.end(), sep) + 1 != static_cast<long>(moduli_.size()))
            throw ParseError("element '" + std::string(token) + "' needs " + std::to_string(moduli_.size()) +
                             " coordinates");
        std::vector<std::uint32_t> coords;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            auto v = parse_uint(parts[i], "coordinate");
            if (v >= moduli_[i])
                throw range_error();
            coords.push_back(v);
        }
        return encode(coords);
    }
    }
    throw range_error();
}

void Group::for_each(const std::function<void(Element)>& fn) const
{
    for (std::uint32_t i = 0; i < order_; ++i)
        fn(Element{i});
}

} // namespace edf
