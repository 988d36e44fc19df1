#pragma once

#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "matchpoly/graph.hpp"
#include "matchpoly/intpoly.hpp"

namespace matchpoly {

/// Matching polynomials of one host graph and all of its induced
/// subgraphs, keyed by live-vertex mask. Two-phase contract: with the
/// precompute policy the table is sealed at construction and every query
/// is a plain read; lazy mode fills a synchronized memo on demand and
/// queries stay linearizable.
class MatchingTable {
public:
    enum class Policy { Auto, PrecomputeAll, Lazy };
    /// Auto precomputes all 2^n entries for n <= 20 (the practical memory
    /// limit) and goes lazy above.
    static constexpr int kPrecomputeMaxVertices = 20;

    explicit MatchingTable(Graph g, Policy policy = Policy::Auto);

    const Graph& graph() const { return g_; }
    /// mu of the host graph.
    const IntPoly& mu() const { return mu(g_.full_mask()); }
    /// mu of the subgraph induced on `live`. Throws std::domain_error when
    /// live is not a subset of V(G).
    const IntPoly& mu(VertexMask live) const;

private:
    IntPoly compute(VertexMask live) const;
    const IntPoly& lazy_get(VertexMask live) const;

    Graph g_;
    bool dense_ = false;
    std::vector<IntPoly> dense_memo_;
    mutable std::unordered_map<VertexMask, IntPoly> lazy_memo_;
    mutable std::shared_mutex lazy_mutex_;
};

/// One-shot mu(G) through a lazy table (only recursion-reachable masks are
/// materialized).
IntPoly matching_polynomial(const Graph& g);

/// p(G,r), read off mu's coefficients: (-1)^r coeff(x^(n-2r)).
mpz_class count_matchings(const Graph& g, int r);
mpz_class count_matchings(const MatchingTable& table, int r);

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::string witness;  // offending edge/vertex when pass is false
};

/// Exact verification of the four matching-polynomial identities:
/// (a) mu multiplies over components, (b) the edge recurrence
/// mu(G) = mu(G-e) - mu(G\{u,v}) for every edge, (c) the vertex recurrence
/// for every vertex, (d) mu' = sum of vertex-deleted mu.
struct IdentityReport {
    IdentityCheck component_product;  // (a)
    IdentityCheck edge_rule;          // (b)
    IdentityCheck vertex_rule;        // (c)
    IdentityCheck derivative_sum;     // (d)
    bool all_pass() const {
        return component_product.pass && edge_rule.pass && vertex_rule.pass && derivative_sum.pass;
    }
};

IdentityReport verify_identities(const Graph& g);
IdentityReport verify_identities(const MatchingTable& table);

}  // namespace matchpoly
