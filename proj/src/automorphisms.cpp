#include "edf/automorphisms.hpp"

#include "edf/errors.hpp"

#include <numeric>
#include <string>

namespace edf {

Automorphism Automorphism::inverse() const
{
    Automorphism inv;
    inv.image.resize(image.size());
    for (std::uint32_t i = 0; i < image.size(); ++i)
        inv.image[image[i].index] = Element{i};
    if (unit) {
        const std::uint32_t n = static_cast<std::uint32_t>(image.size());
        for (std::uint32_t u = 1; u <= n; ++u)
            if (std::uint64_t{u} * *unit % n == 1 % n) {
                inv.unit = u % n;
                break;
            }
    }
    return inv;
}

bool Automorphism::is_identity() const
{
    for (std::uint32_t i = 0; i < image.size(); ++i)
        if (image[i].index != i)
            return false;
    return true;
}

namespace {

void check_supported(const Group& g, std::uint32_t bound)
{
    if (!g.is_abelian())
        throw UnsupportedError("automorphism enumeration needs an abelian group; " + to_string(g.spec()) +
                               " is not abelian");
    if (g.order() > bound)
        throw UnsupportedError("group order " + std::to_string(g.order()) + " exceeds automorphism bound " +
                               std::to_string(bound));
}

class GeneratorImageSearch {
public:
    GeneratorImageSearch(const Group& g, const std::function<bool(const Automorphism&)>& visit)
        : g_(g), visit_(visit), moduli_(g.coordinate_moduli()), n_(g.order())
    {
        multiples_.resize(moduli_.size());
    }

    void run()
    {
        std::vector<Element> span{g_.identity()};
        recurse(0, span);
    }

private:
    // span holds the subgroup generated by the images chosen so far.
    bool recurse(std::size_t j, const std::vector<Element>& span)
    {
        if (j == moduli_.size())
            return emit();
        const std::uint32_t nj = moduli_[j];
        for (std::uint32_t y = 0; y < n_; ++y) {
            Element cand{y};
            if (nj % g_.element_order(cand) != 0)
                continue;
            // Images t*cand for t = 0..nj-1.
            std::vector<Element> mult(nj);
            mult[0] = g_.identity();
            for (std::uint32_t t = 1; t < nj; ++t)
                mult[t] = g_.compose(mult[t - 1], cand);

            std::vector<std::uint8_t> seen(n_, 0);
            std::vector<Element> next;
            next.reserve(span.size() * nj);
            bool injective = true;
            for (std::uint32_t t = 0; t < nj && injective; ++t) {
                for (Element s : span) {
                    Element v = g_.compose(s, mult[t]);
                    if (seen[v.index]) {
                        injective = false;
                        break;
                    }
                    seen[v.index] = 1;
                    next.push_back(v);
                }
            }
            if (!injective)
                continue;
            multiples_[j] = std::move(mult);
            if (!recurse(j + 1, next))
                return false;
        }
        return true;
    }

    bool emit()
    {
        Automorphism a;
        a.image.resize(n_);
        for (std::uint32_t x = 0; x < n_; ++x) {
            auto c = g_.decode(Element{x});
            Element v = g_.identity();
            for (std::size_t i = 0; i < c.size(); ++i)
                v = g_.compose(v, multiples_[i][c[i]]);
            a.image[x] = v;
        }
        return visit_(a);
    }

    const Group& g_;
    const std::function<bool(const Automorphism&)>& visit_;
    std::vector<std::uint32_t> moduli_;
    std::uint32_t n_;
    std::vector<std::vector<Element>> multiples_;
};

} // namespace

void for_each_automorphism(const Group& g, const std::function<bool(const Automorphism&)>& visit,
                           std::uint32_t bound)
{
    check_supported(g, bound);
    if (g.kind() == GroupKind::cyclic) {
        const std::uint32_t n = g.order();
        for (std::uint32_t u = 1; u <= n; ++u) {
            if (std::gcd(u, n) != 1)
                continue;
            Automorphism a;
            a.unit = u % n;
            a.image.resize(n);
            for (std::uint32_t x = 0; x < n; ++x)
                a.image[x] = Element{static_cast<std::uint32_t>(std::uint64_t{u} * x % n)};
            if (!visit(a))
                return;
            if (n == 1)
                return;
        }
        return;
    }
    GeneratorImageSearch(g, visit).run();
}

std::vector<Automorphism> automorphisms(const Group& g, std::uint32_t bound)
{
    std::vector<Automorphism> out;
    for_each_automorphism(
        g,
        [&](const Automorphism& a) {
            out.push_back(a);
            return true;
        },
        bound);
    return out;
}

std::vector<Element> automorphism_orbit_minima(const Group& g, std::uint32_t bound)
{
    check_supported(g, bound);
    const std::uint32_t n = g.order();
    std::vector<Element> minima(n);
    if (g.kind() == GroupKind::cyclic) {
        // The orbit of x under the units is every y with gcd(y, n) = gcd(x, n).
        for (std::uint32_t x = 0; x < n; ++x)
            minima[x] = Element{x == 0 ? 0 : std::gcd(x, n)};
        return minima;
    }
    for (std::uint32_t x = 0; x < n; ++x)
        minima[x] = Element{x};
    for_each_automorphism(
        g,
        [&](const Automorphism& a) {
            for (std::uint32_t x = 0; x < n; ++x)
                if (a.image[x] < minima[x])
                    minima[x] = a.image[x];
            return true;
        },
        bound);
    return minima;
}

} // namespace edf
