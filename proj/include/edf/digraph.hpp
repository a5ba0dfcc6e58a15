#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edf {

struct Edge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

enum class DigraphKind {
    complete,
    tournament,
    cycle,
    oriented_cycle,
    kab,
    kab_oriented,
    star_oriented,
    disjoint_union,
    custom,
};

/// A simple labelled digraph on vertices {0, ..., m-1}. Undirected graphs are
/// stored with both directions of every edge.
class LabelledDigraph {
public:
    LabelledDigraph() = default;
    /// Validates (no loops, vertices < m) and sorts; duplicate edges are rejected.
    LabelledDigraph(std::uint32_t m, std::vector<Edge> edges, DigraphKind kind = DigraphKind::custom,
                    std::string spec = {});

    std::uint32_t vertex_count() const noexcept { return m_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    DigraphKind kind() const noexcept { return kind_; }

    /// Text form accepted by parse_digraph.
    const std::string& spec() const noexcept { return spec_; }

    bool has_edge(std::uint32_t from, std::uint32_t to) const;
    /// At most one of (i,j), (j,i) for every pair.
    bool is_oriented() const;
    /// (i,j) present exactly when (j,i) is.
    bool is_symmetric() const;

    /// Same vertex count and edge set; provenance is ignored.
    friend bool operator==(const LabelledDigraph& a, const LabelledDigraph& b)
    {
        return a.m_ == b.m_ && a.edges_ == b.edges_;
    }

private:
    std::uint32_t m_ = 0;
    std::vector<Edge> edges_;
    DigraphKind kind_ = DigraphKind::custom;
    std::string spec_;
};

LabelledDigraph complete_digraph(std::uint32_t m);
/// Tournament on m vertices. bits[t] refers to the t-th pair (i,j), i<j, in
/// lexicographic order: false keeps (i,j), true uses (j,i). Empty bits means all false.
LabelledDigraph tournament(std::uint32_t m, const std::vector<bool>& bits = {});
LabelledDigraph cycle(std::uint32_t m);
/// Edges (i, i+1 mod m). For m = 2 this is the single undirected edge {(0,1),(1,0)}.
LabelledDigraph oriented_cycle(std::uint32_t m);
LabelledDigraph complete_bipartite(std::uint32_t a, std::uint32_t b);
/// Edges from A = {0..a-1} to B = {a..a+b-1} only.
LabelledDigraph complete_bipartite_oriented(std::uint32_t a, std::uint32_t b);
/// complete_bipartite_oriented(m-1, 1): every vertex points to the centre m-1.
LabelledDigraph star_oriented(std::uint32_t m);

/// Vertices relabelled consecutively block by block.
LabelledDigraph disjoint_union(std::span<const LabelledDigraph> parts);

LabelledDigraph reverse(const LabelledDigraph& h);
LabelledDigraph underlying_undirected(const LabelledDigraph& h);

/// All 2^(|E|/2) orientations of an edge-symmetric digraph, in bit order of
/// the undirected edges {i<j} sorted lexicographically.
std::vector<LabelledDigraph> orientations(const LabelledDigraph& h);

/// complete:m, tournament:m[:bits], cycle:m, cycle*:m, kab:a,b, kab*:a,b,
/// star*:m, union:(spec;spec;...), edges:[m:]0>1,1>2,...
/// Tournament bits are a string of 0/1 characters, one per pair i<j.
LabelledDigraph parse_digraph(std::string_view text);

} // namespace edf
