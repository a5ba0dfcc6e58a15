#include "edf/field.hpp"

#include "edf/number_theory.hpp"

#include <stdexcept>
#include <string>

namespace edf {

namespace {

using Poly = std::vector<std::uint32_t>; // c0, c1, ... (low degree first)

Poly digits(std::uint32_t x, std::uint32_t p, std::uint32_t k)
{
    Poly c(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        c[i] = x % p;
        x /= p;
    }
    return c;
}

std::uint32_t undigits(const Poly& c, std::uint32_t p)
{
    std::uint32_t x = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        x = x * p + c[i];
    return x;
}

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Remainder of a modulo the monic polynomial m, coefficients mod p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
        trim(a);
    }
    return a;
}

// Monic f of degree k is irreducible iff no monic g of degree 1..k/2 divides it.
bool is_irreducible(const Poly& monic, std::uint32_t p)
{
    const std::uint32_t k = static_cast<std::uint32_t>(monic.size() - 1);
    for (std::uint32_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly g = digits(static_cast<std::uint32_t>(t), p, d);
            g.push_back(1);
            if (poly_mod(monic, g, p).empty())
                return false;
        }
    }
    return true;
}

} // namespace

FieldTable::FieldTable(std::uint32_t q) : additive_(GroupSpec::cyclic(1))
{
    q_ = q;
    build(std::nullopt);
}

FieldTable::FieldTable(std::uint32_t q, Element primitive) : additive_(GroupSpec::cyclic(1))
{
    q_ = q;
    build(primitive);
}

void FieldTable::build(std::optional<Element> primitive)
{
    auto pp = prime_power(q_);
    if (!pp)
        throw std::invalid_argument("field order " + std::to_string(q_) + " is not a prime power");
    p_ = pp->prime;
    k_ = pp->exponent;
    additive_ = Group(GroupSpec::field_additive(q_));

    if (k_ > 1) {
        std::uint32_t count = q_; // p^k choices of the low coefficients
        for (std::uint32_t t = 0; t < count; ++t) {
            Poly f = digits(t, p_, k_);
            f.push_back(1);
            if (is_irreducible(f, p_)) {
                modulus_.assign(f.begin(), f.end() - 1);
                break;
            }
        }
        if (modulus_.empty())
            throw std::logic_error("no irreducible polynomial found");
    }

    if (primitive) {
        if (primitive->index == 0 || primitive->index >= q_ || !is_primitive(*primitive))
            throw std::invalid_argument("element " + std::to_string(primitive->index) + " is not primitive in GF(" +
                                        std::to_string(q_) + ")");
        alpha_ = *primitive;
    } else {
        for (std::uint32_t x = 1; x < q_; ++x) {
            if (is_primitive(Element{x})) {
                alpha_ = Element{x};
                break;
            }
        }
    }

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Element cur = one();
    for (std::uint32_t e = 0; e + 1 < q_; ++e) {
        exp_[e] = cur.index;
        log_[cur.index] = e;
        cur = slow_mul(cur, alpha_);
    }
}

Element FieldTable::slow_mul(Element a, Element b) const
{
    if (k_ == 1)
        return Element{static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % q_)};
    Poly pa = digits(a.index, p_, k_);
    Poly pb = digits(b.index, p_, k_);
    Poly prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    Poly m = modulus_;
    m.push_back(1);
    Poly r = poly_mod(prod, m, p_);
    r.resize(k_, 0);
    return Element{undigits(r, p_)};
}

bool FieldTable::is_primitive(Element a) const
{
    if (a.index == 0)
        return false;
    auto slow_pow = [&](Element x, std::uint64_t e) {
        Element result = one();
        while (e > 0) {
            if (e & 1)
                result = slow_mul(result, x);
            x = slow_mul(x, x);
            e >>= 1;
        }
        return result;
    };
    const std::uint64_t n = q_ - 1;
    for (auto r : prime_factors(n))
        if (slow_pow(a, n / r) == one())
            return false;
    return true;
}

Element FieldTable::add(Element a, Element b) const { return additive_.compose(a, b); }
Element FieldTable::sub(Element a, Element b) const { return additive_.difference(a, b); }
Element FieldTable::neg(Element a) const { return additive_.inverse(a); }

Element FieldTable::mul(Element a, Element b) const
{
    if (a.index >= q_ || b.index >= q_)
        throw std::out_of_range("field element out of range");
    if (a.index == 0 || b.index == 0)
        return zero();
    std::uint32_t e = log_[a.index] + log_[b.index];
    if (e >= q_ - 1)
        e -= q_ - 1;
    return Element{exp_[e]};
}

Element FieldTable::inv(Element a) const
{
    if (a.index == 0 || a.index >= q_)
        throw std::domain_error("zero has no multiplicative inverse");
    return Element{exp_[(q_ - 1 - log_[a.index]) % (q_ - 1)]};
}

Element FieldTable::pow(Element a, std::uint64_t e) const
{
    if (a.index == 0)
        return e == 0 ? one() : zero();
    return exp(std::uint64_t{log(a)} * (e % (q_ - 1)));
}

std::uint32_t FieldTable::log(Element a) const
{
    if (a.index == 0 || a.index >= q_)
        throw std::domain_error("discrete log of zero or out-of-range element");
    return log_[a.index];
}

Element FieldTable::exp(std::uint64_t e) const
{
    return Element{exp_[e % (q_ - 1)]};
}

ElementSet cyclotomic_class(const FieldTable& field, std::uint32_t e, std::uint32_t i)
{
    const std::uint32_t n = field.order() - 1;
    if (e == 0 || n % e != 0)
        throw std::invalid_argument("cyclotomic order " + std::to_string(e) + " does not divide q-1 = " +
                                    std::to_string(n));
    if (i >= e)
        throw std::invalid_argument("cyclotomic class index must be below e");
    const std::uint32_t f = n / e;
    ElementSet out;
    out.reserve(f);
    for (std::uint32_t s = 0; s < f; ++s)
        out.push_back(field.exp(std::uint64_t{e} * s + i));
    return out;
}

std::vector<ElementSet> cyclotomic_classes(const FieldTable& field, std::uint32_t e)
{
    std::vector<ElementSet> out;
    for (std::uint32_t i = 0; i < e; ++i)
        out.push_back(cyclotomic_class(field, e, i));
    return out;
}

bool minus_one_in_c0(std::uint32_t q, std::uint32_t e)
{
    FieldTable field(q);
    if (e == 0 || (q - 1) % e != 0)
        throw std::invalid_argument("cyclotomic order " + std::to_string(e) + " does not divide q-1");
    return field.log(field.neg(field.one())) % e == 0;
}

} // namespace edf
