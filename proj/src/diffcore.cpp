#include "edf/diffcore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace edf {

SetFamily sorted_sets(SetFamily fam)
{
    for (auto& s : fam.sets)
        std::sort(s.begin(), s.end());
    return fam;
}

std::uint32_t DifferenceMultiset::max_nonidentity_count() const
{
    if (counts_.size() < 2)
        return 0;
    return *std::max_element(counts_.begin() + 1, counts_.end());
}

DifferenceMultiset& DifferenceMultiset::operator+=(const DifferenceMultiset& other)
{
    if (other.counts_.size() != counts_.size())
        throw std::invalid_argument("adding multisets over groups of different order");
    for (std::size_t i = 0; i < counts_.size(); ++i)
        counts_[i] += other.counts_[i];
    total_ += other.total_;
    return *this;
}

namespace {

void tally(const Group& g, std::span<const Element> a, std::span<const Element> b, DifferenceMultiset& out)
{
    for (Element x : a)
        for (Element y : b)
            out.add(g.difference(x, y));
}

} // namespace

DifferenceMultiset external_difference(const Group& g, std::span<const Element> a, std::span<const Element> b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("external difference of an empty set");
    DifferenceMultiset out(g.order());
    tally(g, a, b, out);
    return out;
}

std::vector<std::vector<Element>> subtraction_table(const Group& g, std::span<const Element> a,
                                                    std::span<const Element> b)
{
    std::vector<std::vector<Element>> rows;
    rows.reserve(a.size());
    for (Element x : a) {
        auto& row = rows.emplace_back();
        row.reserve(b.size());
        for (Element y : b)
            row.push_back(g.difference(x, y));
    }
    return rows;
}

DifferenceMultiset internal_difference(const Group& g, std::span<const Element> a)
{
    if (a.empty())
        throw std::invalid_argument("internal difference of an empty set");
    DifferenceMultiset out(g.order());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j)
                out.add(g.difference(a[i], a[j]));
    return out;
}

std::uint32_t max_internal_multiplicity(const Group& g, std::span<const Element> a)
{
    auto d = internal_difference(g, a);
    return *std::max_element(d.counts().begin(), d.counts().end());
}

DifferenceMultiset edf_multiset(const Group& g, const LabelledDigraph& h, const SetFamily& fam)
{
    if (fam.size() != h.vertex_count())
        throw std::invalid_argument("family has " + std::to_string(fam.size()) + " sets but the digraph has " +
                                    std::to_string(h.vertex_count()) + " vertices");
    DifferenceMultiset out(g.order());
    for (const auto& e : h.edges())
        tally(g, fam[e.to], fam[e.from], out);
    return out;
}

std::string VerificationReport::summary(const Group& g) const
{
    std::string out;
    if (verified) {
        out = "VERIFIED lambda=" + std::to_string(*lambda);
    } else {
        out = "FAILED";
        if (identity_count != 0)
            out += "; identity occurs " + std::to_string(identity_count) + " time(s)";
        for (const auto& [i, j] : disjointness_violations)
            out += "; sets " + std::to_string(i) + " and " + std::to_string(j) + " intersect";
        for (const auto& w : witnesses)
            out += "; " + g.format(w.element) + " occurs " + std::to_string(w.actual) + " time(s), expected " +
                   std::to_string(w.expected);
    }
    for (const auto& n : notes)
        out += "; " + n;
    return out;
}

namespace {

void validate_sets(const Group& g, const SetFamily& fam, bool allow_nonuniform)
{
    std::vector<std::uint32_t> stamp(g.order(), 0);
    std::uint32_t generation = 0;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        ++generation;
        for (Element x : fam[i]) {
            if (!g.contains(x))
                throw std::invalid_argument("set " + std::to_string(i) + " contains an element outside the group");
            if (stamp[x.index] == generation)
                throw std::invalid_argument("set " + std::to_string(i) + " repeats element " + g.format(x));
            stamp[x.index] = generation;
        }
        if (!allow_nonuniform && fam[i].size() != fam[0].size())
            throw std::invalid_argument("set sizes differ (" + std::to_string(fam[0].size()) + " vs " +
                                        std::to_string(fam[i].size()) + ")");
    }
}

bool intersects(const Group& g, const ElementSet& a, const ElementSet& b)
{
    if (a.size() * b.size() < 64) {
        for (Element x : a)
            if (std::find(b.begin(), b.end(), x) != b.end())
                return true;
        return false;
    }
    std::vector<std::uint8_t> mark(g.order(), 0);
    for (Element x : a)
        mark[x.index] = 1;
    return std::any_of(b.begin(), b.end(), [&](Element y) { return mark[y.index] != 0; });
}

} // namespace

VerificationReport verify_h_edf(const Group& g, const LabelledDigraph& h, const SetFamily& fam,
                                const VerifyOptions& options)
{
    if (fam.size() != h.vertex_count())
        throw std::invalid_argument("family has " + std::to_string(fam.size()) + " sets but the digraph has " +
                                    std::to_string(h.vertex_count()) + " vertices");
    validate_sets(g, fam, options.allow_nonuniform);

    VerificationReport report;
    for (std::uint32_t i = 0; i < fam.size(); ++i) {
        for (std::uint32_t j = i + 1; j < fam.size(); ++j) {
            const bool required = options.mode == DisjointMode::disjoint || h.has_edge(i, j) || h.has_edge(j, i);
            if (required && intersects(g, fam[i], fam[j]))
                report.disjointness_violations.emplace_back(i, j);
        }
    }

    auto ms = edf_multiset(g, h, fam);
    report.identity_count = ms.count(g.identity());
    const std::uint32_t lambda =
        options.expected_lambda ? *options.expected_lambda : (g.order() >= 2 ? ms.count(Element{1}) : 0);
    for (std::uint32_t x = 1; x < g.order(); ++x) {
        if (ms.counts()[x] != lambda) {
            if (report.witnesses.size() < max_witnesses)
                report.witnesses.push_back({Element{x}, lambda, ms.counts()[x]});
            else
                break;
        }
    }
    report.verified =
        report.witnesses.empty() && report.identity_count == 0 && report.disjointness_violations.empty();
    if (report.verified)
        report.lambda = lambda;
    return report;
}

std::vector<std::vector<std::uint32_t>> decompose_c_cedf(std::uint32_t m, std::uint32_t c)
{
    if (m < 2 || c < 1 || c >= m)
        throw std::invalid_argument("decomposition needs m >= 2 and 1 <= c <= m-1");
    const std::uint32_t d = std::gcd(m, c);
    std::vector<std::vector<std::uint32_t>> cycles(d);
    for (std::uint32_t j = 0; j < d; ++j)
        for (std::uint32_t i = 0; i < m / d; ++i)
            cycles[j].push_back(static_cast<std::uint32_t>((j + std::uint64_t{i} * c) % m));
    return cycles;
}

bool check_symmetric_pairs(const Group& g, const LabelledDigraph& h, const SetFamily& fam)
{
    if (!h.is_symmetric())
        throw std::invalid_argument("symmetric-pair check needs an edge-symmetric digraph");
    if (fam.size() != h.vertex_count())
        throw std::invalid_argument("family/digraph size mismatch");
    for (const auto& e : h.edges()) {
        if (e.from > e.to)
            continue;
        if (external_difference(g, fam[e.from], fam[e.to]) != external_difference(g, fam[e.to], fam[e.from]))
            return false;
    }
    return true;
}

VerificationReport orient_halving(const Group& g, const LabelledDigraph& h, const SetFamily& fam,
                                  const LabelledDigraph& orientation)
{
    if (!h.is_symmetric())
        throw std::invalid_argument("halving needs an edge-symmetric digraph");
    if (!orientation.is_oriented() || orientation.vertex_count() != h.vertex_count() ||
        underlying_undirected(orientation) != h)
        throw std::invalid_argument("the given digraph is not an orientation of H");

    const bool symmetric = check_symmetric_pairs(g, h, fam);
    auto undirected = verify_h_edf(g, h, fam);
    VerifyOptions opts;
    std::vector<std::string> notes;
    if (undirected.verified && *undirected.lambda % 2 == 0)
        opts.expected_lambda = *undirected.lambda / 2;
    else if (undirected.verified)
        notes.push_back("undirected lambda " + std::to_string(*undirected.lambda) + " is odd");
    else
        notes.push_back("family is not an EDF on the undirected digraph");
    if (!symmetric)
        notes.push_back("Delta(A_i,A_j) != Delta(A_j,A_i) on some edge");

    auto report = verify_h_edf(g, orientation, fam, opts);
    if (!notes.empty()) {
        report.verified = false;
        report.lambda.reset();
    }
    report.notes.insert(report.notes.end(), notes.begin(), notes.end());
    return report;
}

VerificationReport double_to_undirected(const Group& g, const LabelledDigraph& oriented, const SetFamily& fam,
                                        DisjointMode mode)
{
    if (!oriented.is_oriented())
        throw std::invalid_argument("double_to_undirected needs an oriented digraph");
    VerifyOptions source_opts;
    source_opts.mode = mode;
    auto source = verify_h_edf(g, oriented, fam, source_opts);

    VerifyOptions opts;
    opts.mode = mode;
    if (source.verified)
        opts.expected_lambda = 2 * *source.lambda;
    auto report = verify_h_edf(g, underlying_undirected(oriented), fam, opts);
    if (!source.verified)
        report.notes.push_back("family is not an EDF on the oriented digraph");
    return report;
}

} // namespace edf
