#include "matchpoly/matching.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

#include "matchpoly/errors.hpp"

namespace matchpoly {

namespace {

// Expansion pivot: live vertex of highest degree inside the induced
// subgraph, lowest index on ties. Fewer recursive masks than a fixed
// pivot; no effect on results.
int pick_pivot(const Graph& g, VertexMask live) {
    int best = -1, best_deg = -1;
    VertexMask m = live;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int deg = std::popcount(g.neighbors(v) & live);
        if (deg > best_deg) {
            best_deg = deg;
            best = v;
        }
    }
    return best;
}

}  // namespace

MatchingTable::MatchingTable(Graph g, Policy policy) : g_(std::move(g)) {
    if (policy == Policy::Auto)
        policy = g_.vertex_count() <= kPrecomputeMaxVertices ? Policy::PrecomputeAll : Policy::Lazy;
    dense_ = (policy == Policy::PrecomputeAll);
    if (!dense_) return;

    // Ascending mask order: every recurrence term is a strict submask.
    const VertexMask full = g_.full_mask();
    dense_memo_.resize(static_cast<std::size_t>(full) + 1);
    dense_memo_[0] = IntPoly(1);
    for (VertexMask live = 1; live <= full; ++live) {
        int u = pick_pivot(g_, live);
        IntPoly val = dense_memo_[live & ~mask_bit(u)].shifted(1);
        VertexMask nb = g_.neighbors(u) & live;
        while (nb) {
            int i = std::countr_zero(nb);
            nb &= nb - 1;
            val -= dense_memo_[live & ~mask_bit(u) & ~mask_bit(i)];
        }
        dense_memo_[live] = std::move(val);
    }
    if (dense_memo_[full].degree() != g_.vertex_count() || !dense_memo_[full].is_monic())
        throw InternalError("matching polynomial of the host graph is not monic of degree n");
}

const IntPoly& MatchingTable::mu(VertexMask live) const {
    if ((live & ~g_.full_mask()) != 0)
        throw std::domain_error("mu: live set is not a subset of V(G)");
    if (dense_) return dense_memo_[live];
    return lazy_get(live);
}

const IntPoly& MatchingTable::lazy_get(VertexMask live) const {
    {
        std::shared_lock lock(lazy_mutex_);
        if (auto it = lazy_memo_.find(live); it != lazy_memo_.end()) return it->second;
    }
    IntPoly val = compute(live);
    std::unique_lock lock(lazy_mutex_);
    auto [it, inserted] = lazy_memo_.try_emplace(live, std::move(val));
    return it->second;  // unordered_map references are stable across rehash
}

IntPoly MatchingTable::compute(VertexMask live) const {
    if (live == 0) return IntPoly(1);
    int u = pick_pivot(g_, live);
    IntPoly val = lazy_get(live & ~mask_bit(u)).shifted(1);
    VertexMask nb = g_.neighbors(u) & live;
    while (nb) {
        int i = std::countr_zero(nb);
        nb &= nb - 1;
        val -= lazy_get(live & ~mask_bit(u) & ~mask_bit(i));
    }
    if (val.degree() != std::popcount(live) || !val.is_monic())
        throw InternalError("matching polynomial is not monic of the induced order");
    return val;
}

IntPoly matching_polynomial(const Graph& g) {
    MatchingTable t(g, MatchingTable::Policy::Lazy);
    return t.mu();
}

mpz_class count_matchings(const MatchingTable& table, int r) {
    if (r < 0) throw std::invalid_argument("count_matchings: negative r");
    int n = table.graph().vertex_count();
    if (2 * r > n) return 0;
    mpz_class c = table.mu().coeff(n - 2 * r);
    if (r % 2 == 1) c = -c;
    return c;
}

mpz_class count_matchings(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("count_matchings: negative r");
    if (2 * r > g.vertex_count()) return 0;
    MatchingTable t(g, MatchingTable::Policy::Lazy);
    return count_matchings(t, r);
}

IdentityReport verify_identities(const Graph& g) {
    MatchingTable t(g, g.vertex_count() <= MatchingTable::kPrecomputeMaxVertices
                           ? MatchingTable::Policy::PrecomputeAll
                           : MatchingTable::Policy::Lazy);
    return verify_identities(t);
}

IdentityReport verify_identities(const MatchingTable& t) {
    const Graph& g = t.graph();
    const VertexMask full = g.full_mask();
    IdentityReport rep;
    rep.component_product.name = "mu(G u H) = mu(G) mu(H)";
    rep.edge_rule.name = "mu(G) = mu(G-e) - mu(G\\{u,v})";
    rep.vertex_rule.name = "mu(G) = x mu(G\\u) - sum_{i~u} mu(G\\{u,i})";
    rep.derivative_sum.name = "mu'(G) = sum_u mu(G\\u)";

    // (a)
    IntPoly prod(1);
    for (VertexMask comp : components(g)) prod *= t.mu(comp);
    if (prod != t.mu()) {
        rep.component_product.pass = false;
        rep.component_product.witness = "component product differs";
    }

    // (b)
    for (auto [u, v] : g.edges()) {
        IntPoly lhs = matching_polynomial(delete_edge(g, u, v)) - t.mu(full & ~mask_bit(u) & ~mask_bit(v));
        if (lhs != t.mu()) {
            rep.edge_rule.pass = false;
            rep.edge_rule.witness = "edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
            break;
        }
    }

    // (c)
    for (int u = 0; u < g.vertex_count(); ++u) {
        IntPoly rhs = t.mu(full & ~mask_bit(u)).shifted(1);
        for (int i : mask_to_vertices(g.neighbors(u))) rhs -= t.mu(full & ~mask_bit(u) & ~mask_bit(i));
        if (rhs != t.mu()) {
            rep.vertex_rule.pass = false;
            rep.vertex_rule.witness = "vertex " + std::to_string(u);
            break;
        }
    }

    // (d)
    IntPoly sum;
    for (int u = 0; u < g.vertex_count(); ++u) sum += t.mu(full & ~mask_bit(u));
    if (sum != t.mu().derivative()) {
        rep.derivative_sum.pass = false;
        rep.derivative_sum.witness = "derivative sum differs";
    }
    return rep;
}

}  // namespace matchpoly
