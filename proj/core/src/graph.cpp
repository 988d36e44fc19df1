#include "matchpoly/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "matchpoly/errors.hpp"

namespace matchpoly {

std::vector<int> mask_to_vertices(VertexMask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m) {
        int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

VertexMask mask_of(const std::vector<int>& vertices) {
    VertexMask m = 0;
    for (int v : vertices) m |= mask_bit(v);
    return m;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
    if (n < 0 || n > kMaxVertices)
        throw std::domain_error("vertex count " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw std::domain_error("label count does not match vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    g.labels_ = std::move(labels);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::domain_error("edge endpoint out of range");
        if (u == v) throw std::domain_error("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)] |= mask_bit(v);
        g.adj_[static_cast<std::size_t>(v)] |= mask_bit(u);
    }
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (VertexMask m : adj_) twice += std::popcount(m);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        VertexMask higher = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        for (int v : mask_to_vertices(higher)) out.emplace_back(u, v);
    }
    return out;
}

std::string Graph::label(int v) const {
    if (v < 0 || v >= n_) throw std::domain_error("vertex index out of range");
    if (labels_.empty()) return std::to_string(v);
    return labels_[static_cast<std::size_t>(v)];
}

Graph delete_vertices(const Graph& g, VertexMask deleted) {
    if ((deleted & ~g.full_mask()) != 0)
        throw std::domain_error("delete_vertices: set is not a subset of V(G)");
    VertexMask live = g.full_mask() & ~deleted;
    std::vector<int> keep = mask_to_vertices(live);
    std::vector<int> new_index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) new_index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        if (mask_contains(live, u) && mask_contains(live, v))
            edges.emplace_back(new_index[static_cast<std::size_t>(u)], new_index[static_cast<std::size_t>(v)]);
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(keep.size());
        for (int v : keep) labels.push_back(g.label(v));
    }
    return Graph::from_edges(static_cast<int>(keep.size()), edges, std::move(labels));
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
        throw std::domain_error("delete_edge: no such edge");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        edges.emplace_back(a, b);
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (int i = 0; i < g.vertex_count(); ++i) labels.push_back(g.label(i));
    }
    return Graph::from_edges(g.vertex_count(), edges, std::move(labels));
}

std::vector<VertexMask> components(const Graph& g, VertexMask live) {
    if ((live & ~g.full_mask()) != 0)
        throw std::domain_error("components: live set is not a subset of V(G)");
    std::vector<VertexMask> out;
    VertexMask remaining = live;
    while (remaining) {
        VertexMask comp = remaining & -remaining;  // least unvisited vertex
        for (;;) {
            VertexMask grown = comp;
            for (int v : mask_to_vertices(comp)) grown |= g.neighbors(v) & live;
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        remaining &= ~comp;
    }
    return out;  // least-vertex order falls out of taking lowest bits first
}

std::vector<VertexMask> components(const Graph& g) { return components(g, g.full_mask()); }

int odd_component_count(const Graph& g, VertexMask live) {
    int odd = 0;
    for (VertexMask c : components(g, live))
        if (std::popcount(c) % 2 == 1) ++odd;
    return odd;
}

int odd_component_count(const Graph& g) { return odd_component_count(g, g.full_mask()); }

bool is_connected(const Graph& g, VertexMask live) {
    if (live == 0) return true;
    return components(g, live).size() == 1;
}

bool is_connected(const Graph& g) { return is_connected(g, g.full_mask()); }

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;

    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    auto index_of = [&](const std::string& token) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == token) return static_cast<int>(i);
        if (static_cast<int>(names.size()) >= kMaxVertices)
            throw ParseError("more than " + std::to_string(kMaxVertices) + " vertices", lineno);
        names.push_back(token);
        return static_cast<int>(names.size() - 1);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (auto hash = line.find('#'); hash != std::string::npos) line = strip(line.substr(0, hash));
        if (line.empty()) continue;

        if (line.rfind("vertices:", 0) == 0) {
            std::istringstream hs(line.substr(9));
            long k = -1;
            if (!(hs >> k) || k < 0 || (hs >> std::ws, !hs.eof()))
                throw ParseError("bad vertices header", lineno);
            if (k > kMaxVertices)
                throw ParseError("declared vertex count exceeds " + std::to_string(kMaxVertices), lineno);
            for (long i = static_cast<long>(names.size()); i < k; ++i) (void)index_of(std::to_string(i));
            continue;
        }

        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw ParseError("expected 'u v'", lineno);
        int u = index_of(a), v = index_of(b);
        if (u == v) throw std::domain_error("line " + std::to_string(lineno) + ": self-loop at '" + a + "'");
        edges.emplace_back(u, v);
    }
    const int n = static_cast<int>(names.size());
    return Graph::from_edges(n, edges, std::move(names));
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edge_list = g.edges();
    VertexMask touched = 0;
    for (auto [u, v] : edge_list) touched |= mask_bit(u) | mask_bit(v);
    // the format can only declare isolated vertices through the numeric
    // header, so fall back to index names when any exist
    bool numeric = touched != g.full_mask();
    if (numeric) {
        out << "vertices: " << g.vertex_count() << "\n";
        for (auto [u, v] : edge_list) out << u << ' ' << v << "\n";
    } else {
        for (auto [u, v] : edge_list) out << g.label(u) << ' ' << g.label(v) << "\n";
    }
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    std::string s{text};
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("empty graph6 input");
    if (s[0] == '~') throw ParseError("graph6 vertex count exceeds " + std::to_string(kMaxVertices));

    for (char ch : s) {
        if (ch < 63 || ch > 126) throw ParseError("graph6 character out of range");
    }
    int n = s[0] - 63;
    if (n > kMaxVertices) throw ParseError("graph6 vertex count exceeds " + std::to_string(kMaxVertices));
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes)
        throw ParseError("graph6 length mismatch for n=" + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = s[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // canonical encodings zero-pad the final sextet
    for (std::size_t pad = nbits; pad < nbytes * 6; ++pad) {
        int byte = s[1 + pad / 6] - 63;
        if ((byte >> (5 - pad % 6)) & 1) throw ParseError("graph6 padding bits must be zero");
    }
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string s(1, static_cast<char>(63 + n));
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    s.resize(1 + nbytes, static_cast<char>(63));
    std::size_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if (g.has_edge(row, col)) s[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
        }
    }
    return s;
}

Graph graph_from_edge_bits(int n, std::uint64_t bits) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if ((bits >> bit) & 1) edges.emplace_back(row, col);
        }
    }
    return Graph::from_edges(n, edges);
}

LabeledGraphStream LabeledGraphStream::exhaustive(int n) {
    if (n < 0 || n > 7)
        throw std::domain_error("exhaustive enumeration supports 0 <= n <= 7; use random mode above");
    LabeledGraphStream s;
    s.exhaustive_ = true;
    s.n_ = n;
    s.size_ = std::uint64_t{1} << (n * (n - 1) / 2);
    return s;
}

LabeledGraphStream LabeledGraphStream::random(int n, double edge_probability, std::uint64_t count,
                                              std::uint64_t seed) {
    if (n < 0 || n > kMaxVertices) throw std::domain_error("random mode: n outside [0, cap]");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw std::domain_error("random mode: edge probability outside [0, 1]");
    LabeledGraphStream s;
    s.exhaustive_ = false;
    s.n_ = n;
    s.p_ = edge_probability;
    s.seed_ = seed;
    s.size_ = count;
    return s;
}

Graph LabeledGraphStream::at(std::uint64_t index) const {
    if (index >= size_) throw std::domain_error("graph stream index out of range");
    if (exhaustive_) return graph_from_edge_bits(n_, index);

    // one generator per index keeps random access pure
    std::mt19937_64 rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    std::bernoulli_distribution flip(p_);
    std::vector<std::pair<int, int>> edges;
    for (int col = 1; col < n_; ++col)
        for (int row = 0; row < col; ++row)
            if (flip(rng)) edges.emplace_back(row, col);
    return Graph::from_edges(n_, edges);
}

std::optional<Graph> LabeledGraphStream::next() {
    if (cursor_ >= size_) return std::nullopt;
    return at(cursor_++);
}

}  // namespace matchpoly
