#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "matchpoly/decomposition.hpp"

namespace matchpoly {

/// Exhaustive subset scans refuse to run on hosts larger than this unless
/// explicitly overridden; they are exponential in n.
inline constexpr int kEnumerationCap = 22;

struct BarrierReport {
    VertexMask set = 0;
    int c_theta = 0;
    int c_odd = 0;
    int size = 0;
    bool theta_barrier = false;
    bool theta_extreme = false;
    bool classical_barrier = false;
    bool zero_barrier = false;
    bool maximal_theta_barrier = false;
};

struct DeficiencyResult {
    int value = 0;
    VertexMask witness = 0;  // least mask attaining the maximum
};

struct MaximalIntersection {
    VertexMask intersection = 0;
    bool n_theta_empty = false;
    bool equals_a_theta = false;
};

/// Decision procedures and family enumeration for theta-barrier,
/// theta-extreme and classical barrier sets of one (graph, theta) pair.
class BarrierLab {
public:
    enum class EnumMode { Safe, Pruned };

    BarrierLab(const MatchingTable& table, const ThetaSpec& theta, bool allow_large_scans = false);

    const ThetaAnalyzer& analyzer() const { return theta_; }

    /// c_theta(G\X) - |X| = mult(theta, G).
    bool is_theta_barrier(VertexMask x) const;
    /// mult(theta, G\X) = mult(theta, G) + |X|.
    bool is_theta_extreme(VertexMask x) const;
    /// c_odd(G\X) - |X| = mult(0, G), the Berge maximum.
    bool is_classical_barrier(VertexMask x) const;
    /// The theta = 0 instance of the theta-barrier test.
    bool is_zero_barrier(VertexMask x) const;

    /// All flags for one set; the maximal flag is left false (it is a
    /// family property, filled by enumerate_barrier_sets).
    BarrierReport report_for(VertexMask x) const;

    /// max over X of c_theta(G\X) - |X| with the least witness mask.
    /// The value provably equals mult(theta, G); disagreement trips an
    /// InternalError with diagnostics.
    DeficiencyResult theta_deficiency() const;

    /// All theta-barrier sets in increasing-cardinality, then
    /// increasing-mask order. Safe mode scans all 2^n subsets; pruned mode
    /// only subsets of A u P. The two modes provably agree.
    std::vector<BarrierReport> enumerate_barrier_sets(EnumMode mode = EnumMode::Pruned) const;

    /// All theta-extreme sets, same order; the family is downward-closed
    /// (asserted, InternalError on violation).
    std::vector<VertexMask> enumerate_extreme_sets() const;

    /// Inclusion-maximal theta-barrier sets.
    std::vector<VertexMask> maximal_barrier_sets() const;

    /// The constructive completion A_theta(G\X) u X of a theta-extreme X
    /// to a theta-barrier containing it. Throws std::domain_error when X
    /// is not theta-extreme.
    VertexMask extend_extreme_to_barrier(VertexMask x) const;

    /// Intersection of all maximal theta-barrier sets. When N_theta(G) is
    /// empty the result provably equals A_theta(G) (asserted); otherwise
    /// the intersection is returned as-is with the flags reporting the
    /// relationship.
    MaximalIntersection intersect_maximal_barriers() const;

private:
    const ThetaAnalyzer& zero_analyzer() const { return zero_ ? *zero_ : theta_; }
    void require_scan_allowed(const char* what) const;

    const MatchingTable& table_;
    ThetaAnalyzer theta_;
    std::optional<ThetaAnalyzer> zero_;  // absent when theta is already 0
    bool allow_large_scans_;
};

/// Visits the submasks of `universe` in increasing-cardinality then
/// increasing-mask order; stops early when the callback returns false.
void for_each_submask_ordered(VertexMask universe, const std::function<bool(VertexMask)>& visit);

}  // namespace matchpoly
