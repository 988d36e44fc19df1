#pragma once

#include <mutex>
#include <unordered_map>

#include "matchpoly/matching.hpp"
#include "matchpoly/theta.hpp"

namespace matchpoly {

enum class VertexKind { Essential, Neutral, Positive };

std::string to_string(VertexKind kind);

struct VertexClass {
    VertexKind kind = VertexKind::Neutral;
    bool special = false;  // not essential, adjacent to an essential vertex
};

/// The theta partition of a vertex set: D essential, A special, N neutral,
/// P positive-but-not-special; Q = A u P is the full positive set when the
/// partition invariants hold.
struct Decomposition {
    int mult = 0;
    VertexMask D = 0, A = 0, N = 0, P = 0;
    VertexMask Q() const { return A | P; }
};

/// Everything theta-local for one (table, theta) pair, with mask-keyed
/// caches for multiplicity, criticality and critical-component counts.
/// Methods are logically pure; caches are internally synchronized, so
/// concurrent reads are safe against a sealed table.
class ThetaAnalyzer {
public:
    ThetaAnalyzer(const MatchingTable& table, ThetaSpec theta);

    const MatchingTable& table() const { return table_; }
    const ThetaSpec& theta() const { return theta_; }

    /// mult(theta, G[live]).
    int multiplicity(VertexMask live) const;
    int multiplicity() const { return multiplicity(table_.graph().full_mask()); }

    /// Classification by the multiplicity step when u is deleted from
    /// G[live]; a step outside {-1, 0, +1} trips an InternalError.
    VertexClass classify_vertex(VertexMask live, int u) const;

    Decomposition decompose(VertexMask live) const;
    Decomposition decompose() const { return decompose(table_.graph().full_mask()); }

    /// mult(theta, G[live]) = 1 and every vertex of live essential.
    /// Throws std::domain_error for the empty set.
    bool is_theta_critical(VertexMask live) const;

    /// Number of theta-critical components of G[live].
    int critical_components_in(VertexMask live) const;
    /// c_theta(G \ deleted).
    int critical_component_count(VertexMask deleted) const;

private:
    int mult_impl(VertexMask live) const;
    bool critical_impl(VertexMask live) const;
    int components_impl(VertexMask live) const;
    VertexClass classify_impl(VertexMask live, int u) const;
    Decomposition decompose_impl(VertexMask live) const;
    void check_subset(VertexMask live) const;

    const MatchingTable& table_;
    ThetaSpec theta_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<VertexMask, int> mult_cache_;
    mutable std::unordered_map<VertexMask, bool> critical_cache_;
    mutable std::unordered_map<VertexMask, int> count_cache_;
};

}  // namespace matchpoly
