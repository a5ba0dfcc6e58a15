#include "edf/digraph.hpp"

#include "edf/errors.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <stdexcept>

namespace edf {

LabelledDigraph::LabelledDigraph(std::uint32_t m, std::vector<Edge> edges, DigraphKind kind, std::string spec)
    : m_(m), edges_(std::move(edges)), kind_(kind), spec_(std::move(spec))
{
    for (const auto& e : edges_) {
        if (e.from >= m_ || e.to >= m_)
            throw std::invalid_argument("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                        ") references a vertex outside 0.." + std::to_string(m_ == 0 ? 0 : m_ - 1));
        if (e.from == e.to)
            throw std::invalid_argument("loop at vertex " + std::to_string(e.from));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate directed edge");
    if (spec_.empty()) {
        spec_ = "edges:" + std::to_string(m_) + ":";
        for (std::size_t i = 0; i < edges_.size(); ++i)
            spec_ += (i ? "," : "") + std::to_string(edges_[i].from) + ">" + std::to_string(edges_[i].to);
    }
}

bool LabelledDigraph::has_edge(std::uint32_t from, std::uint32_t to) const
{
    return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

bool LabelledDigraph::is_oriented() const
{
    return std::none_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return has_edge(e.to, e.from); });
}

bool LabelledDigraph::is_symmetric() const
{
    return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return has_edge(e.to, e.from); });
}

namespace {

void require_vertices(std::uint32_t m, std::uint32_t minimum, const char* what)
{
    if (m < minimum)
        throw std::invalid_argument(std::string(what) + " needs at least " + std::to_string(minimum) + " vertices");
}

} // namespace

LabelledDigraph complete_digraph(std::uint32_t m)
{
    require_vertices(m, 2, "complete graph");
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            if (i != j)
                edges.push_back({i, j});
    return {m, std::move(edges), DigraphKind::complete, "complete:" + std::to_string(m)};
}

LabelledDigraph tournament(std::uint32_t m, const std::vector<bool>& bits)
{
    require_vertices(m, 2, "tournament");
    const std::size_t pairs = std::size_t{m} * (m - 1) / 2;
    if (!bits.empty() && bits.size() != pairs)
        throw std::invalid_argument("tournament on " + std::to_string(m) + " vertices needs " + std::to_string(pairs) +
                                    " orientation bits");
    std::vector<Edge> edges;
    std::string spec = "tournament:" + std::to_string(m);
    std::string bit_text;
    std::size_t t = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = i + 1; j < m; ++j, ++t) {
            const bool flip = !bits.empty() && bits[t];
            edges.push_back(flip ? Edge{j, i} : Edge{i, j});
            bit_text += flip ? '1' : '0';
        }
    }
    if (!bits.empty() && bit_text.find('1') != std::string::npos)
        spec += ":" + bit_text;
    return {m, std::move(edges), DigraphKind::tournament, spec};
}

LabelledDigraph cycle(std::uint32_t m)
{
    require_vertices(m, 3, "cycle");
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < m; ++i) {
        edges.push_back({i, (i + 1) % m});
        edges.push_back({(i + 1) % m, i});
    }
    return {m, std::move(edges), DigraphKind::cycle, "cycle:" + std::to_string(m)};
}

LabelledDigraph oriented_cycle(std::uint32_t m)
{
    require_vertices(m, 2, "oriented cycle");
    std::vector<Edge> edges;
    if (m == 2) {
        edges = {{0, 1}, {1, 0}};
    } else {
        for (std::uint32_t i = 0; i < m; ++i)
            edges.push_back({i, (i + 1) % m});
    }
    return {m, std::move(edges), DigraphKind::oriented_cycle, "cycle*:" + std::to_string(m)};
}

LabelledDigraph complete_bipartite(std::uint32_t a, std::uint32_t b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete bipartite graph needs a, b >= 1");
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < a; ++i) {
        for (std::uint32_t j = a; j < a + b; ++j) {
            edges.push_back({i, j});
            edges.push_back({j, i});
        }
    }
    return {a + b, std::move(edges), DigraphKind::kab, "kab:" + std::to_string(a) + "," + std::to_string(b)};
}

LabelledDigraph complete_bipartite_oriented(std::uint32_t a, std::uint32_t b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete bipartite digraph needs a, b >= 1");
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < a; ++i)
        for (std::uint32_t j = a; j < a + b; ++j)
            edges.push_back({i, j});
    return {a + b, std::move(edges), DigraphKind::kab_oriented,
            "kab*:" + std::to_string(a) + "," + std::to_string(b)};
}

LabelledDigraph star_oriented(std::uint32_t m)
{
    require_vertices(m, 2, "star");
    auto h = complete_bipartite_oriented(m - 1, 1);
    return {m, h.edges(), DigraphKind::star_oriented, "star*:" + std::to_string(m)};
}

LabelledDigraph disjoint_union(std::span<const LabelledDigraph> parts)
{
    if (parts.empty())
        throw std::invalid_argument("disjoint union of an empty list");
    std::vector<Edge> edges;
    std::uint32_t offset = 0;
    std::string spec = "union:(";
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (const auto& e : parts[p].edges())
            edges.push_back({e.from + offset, e.to + offset});
        offset += parts[p].vertex_count();
        spec += (p ? ";" : "") + parts[p].spec();
    }
    spec += ")";
    return {offset, std::move(edges), DigraphKind::disjoint_union, spec};
}

LabelledDigraph reverse(const LabelledDigraph& h)
{
    std::vector<Edge> edges;
    edges.reserve(h.edge_count());
    for (const auto& e : h.edges())
        edges.push_back({e.to, e.from});
    return {h.vertex_count(), std::move(edges)};
}

LabelledDigraph underlying_undirected(const LabelledDigraph& h)
{
    std::vector<Edge> edges = h.edges();
    for (const auto& e : h.edges())
        if (!h.has_edge(e.to, e.from))
            edges.push_back({e.to, e.from});
    return {h.vertex_count(), std::move(edges)};
}

std::vector<LabelledDigraph> orientations(const LabelledDigraph& h)
{
    if (!h.is_symmetric())
        throw std::invalid_argument("orientations need an edge-symmetric digraph");
    std::vector<Edge> undirected;
    for (const auto& e : h.edges())
        if (e.from < e.to)
            undirected.push_back(e);
    if (undirected.size() > 20)
        throw std::invalid_argument("too many edges to enumerate all orientations");
    std::vector<LabelledDigraph> out;
    const std::uint64_t count = std::uint64_t{1} << undirected.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t t = 0; t < undirected.size(); ++t) {
            const auto& e = undirected[t];
            edges.push_back(((mask >> t) & 1) ? Edge{e.to, e.from} : e);
        }
        out.emplace_back(h.vertex_count(), std::move(edges));
    }
    return out;
}

namespace {

std::uint32_t to_uint(std::string_view s, std::string_view context)
{
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad number '" + std::string(s) + "' in digraph spec '" + std::string(context) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return out;
}

// Splits on ';' outside parentheses.
std::vector<std::string_view> split_top_level(std::string_view s)
{
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')')
            --depth;
        else if (s[i] == ';' && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

std::pair<std::uint32_t, std::uint32_t> parse_pair(std::string_view args, std::string_view context)
{
    auto parts = split(args, ',');
    if (parts.size() != 2)
        throw ParseError("expected a,b in digraph spec '" + std::string(context) + "'");
    return {to_uint(parts[0], context), to_uint(parts[1], context)};
}

} // namespace

LabelledDigraph parse_digraph(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("digraph spec '" + std::string(text) + "' lacks a ':'");
    auto kind = text.substr(0, colon);
    auto args = text.substr(colon + 1);

    try {
        if (kind == "complete")
            return complete_digraph(to_uint(args, text));
        if (kind == "cycle")
            return cycle(to_uint(args, text));
        if (kind == "cycle*")
            return oriented_cycle(to_uint(args, text));
        if (kind == "star*")
            return star_oriented(to_uint(args, text));
        if (kind == "kab") {
            auto [a, b] = parse_pair(args, text);
            return complete_bipartite(a, b);
        }
        if (kind == "kab*") {
            auto [a, b] = parse_pair(args, text);
            return complete_bipartite_oriented(a, b);
        }
        if (kind == "tournament") {
            auto parts = split(args, ':');
            if (parts.size() > 2)
                throw ParseError("tournament spec is tournament:m[:bits]");
            std::vector<bool> bits;
            if (parts.size() == 2) {
                for (char c : parts[1]) {
                    if (c != '0' && c != '1')
                        throw ParseError("tournament bits must be 0/1 characters");
                    bits.push_back(c == '1');
                }
            }
            return tournament(to_uint(parts[0], text), bits);
        }
        if (kind == "union") {
            if (args.size() < 2 || args.front() != '(' || args.back() != ')')
                throw ParseError("union spec is union:(spec;spec;...)");
            std::vector<LabelledDigraph> parts;
            for (auto part : split_top_level(args.substr(1, args.size() - 2)))
                parts.push_back(parse_digraph(part));
            return disjoint_union(parts);
        }
        if (kind == "edges") {
            std::optional<std::uint32_t> m;
            auto body = args;
            if (auto c = args.find(':'); c != std::string_view::npos) {
                m = to_uint(args.substr(0, c), text);
                body = args.substr(c + 1);
            }
            std::vector<Edge> edges;
            std::uint32_t max_vertex = 0;
            if (!body.empty()) {
                for (auto item : split(body, ',')) {
                    auto gt = item.find('>');
                    if (gt == std::string_view::npos)
                        throw ParseError("edge '" + std::string(item) + "' should look like i>j");
                    Edge e{to_uint(item.substr(0, gt), text), to_uint(item.substr(gt + 1), text)};
                    max_vertex = std::max({max_vertex, e.from, e.to});
                    edges.push_back(e);
                }
            }
            const std::uint32_t vertices = m ? *m : (edges.empty() ? 0 : max_vertex + 1);
            return {vertices, std::move(edges)};
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError("invalid digraph '" + std::string(text) + "': " + e.what());
    }
    throw ParseError("unknown digraph kind '" + std::string(kind) + "'");
}

} // namespace edf
