#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matchpoly {

/// Vertex subsets are bitmasks over 0..n-1 of a host graph.
using VertexMask = std::uint64_t;

/// Hard cap on vertex count so every subset fits a machine word and
/// subset-indexed tables stay addressable.
inline constexpr int kMaxVertices = 26;
static_assert(kMaxVertices <= 63);

inline int mask_size(VertexMask m) { return std::popcount(m); }
inline bool mask_contains(VertexMask m, int v) { return (m >> v) & 1u; }
inline VertexMask mask_bit(int v) { return VertexMask{1} << v; }

std::vector<int> mask_to_vertices(VertexMask m);
VertexMask mask_of(const std::vector<int>& vertices);

/// Labeled simple graph with per-vertex neighbor bitsets. Immutable after
/// construction; safe for unrestricted concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Vertices 0..n-1; duplicate edges collapse. Throws std::domain_error
    /// on self-loops, out-of-range endpoints, or n above the cap.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const;
    VertexMask full_mask() const { return n_ == 0 ? 0 : (VertexMask{1} << n_) - 1; }
    VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return mask_contains(adj_[static_cast<std::size_t>(u)], v); }
    int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    /// Original vertex name from edge-list input; the index as a string
    /// otherwise.
    std::string label(int v) const;

private:
    int n_ = 0;
    std::vector<VertexMask> adj_;
    std::vector<std::string> labels_;
};

/// Induced subgraph on V(G) minus the deleted set, vertices renumbered
/// compactly in increasing original order, surviving labels kept. The
/// result is independent of any deletion order. Throws std::domain_error
/// when the set is not a subset of V(G).
Graph delete_vertices(const Graph& g, VertexMask deleted);

/// Same graph with one edge removed. Throws std::domain_error when the
/// edge is absent.
Graph delete_edge(const Graph& g, int u, int v);

/// Connected components of the subgraph induced on `live`, as masks,
/// sorted by least vertex. Defaults to the whole graph.
std::vector<VertexMask> components(const Graph& g, VertexMask live);
std::vector<VertexMask> components(const Graph& g);

int odd_component_count(const Graph& g, VertexMask live);
int odd_component_count(const Graph& g);

bool is_connected(const Graph& g, VertexMask live);
bool is_connected(const Graph& g);

/// Edge-list text: one "u v" per line, integer or symbolic endpoints,
/// '#' comments and blank lines ignored, optional "vertices: k" header
/// declaring k vertices named 0..k-1 (for isolated vertices). Endpoints
/// are assigned indices in order of first appearance.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// One standard graph6-encoded graph (canonical form: zero padding bits).
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Deterministic corpus streams. Exhaustive mode yields each of the
/// 2^(n(n-1)/2) labeled graphs on n vertices exactly once, in edge-bitmap
/// order; exhaustive n is capped at 7. Random mode draws `count`
/// independent G(n, p) samples from a seeded generator.
class LabeledGraphStream {
public:
    static LabeledGraphStream exhaustive(int n);
    static LabeledGraphStream random(int n, double edge_probability, std::uint64_t count,
                                     std::uint64_t seed);

    std::optional<Graph> next();
    std::uint64_t size() const { return size_; }

    /// Random access; `index` < size(). Thread-safe, pure.
    Graph at(std::uint64_t index) const;

private:
    LabeledGraphStream() = default;
    bool exhaustive_ = true;
    int n_ = 0;
    double p_ = 0.0;
    std::uint64_t seed_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t cursor_ = 0;
};

/// Graph with the given 0/1 edge bitmap in upper-triangle column order
/// (the graph6 bit order): x01, x02, x12, x03, x13, x23, ...
Graph graph_from_edge_bits(int n, std::uint64_t bits);

}  // namespace matchpoly
