#include "matchpoly/barrier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "matchpoly/errors.hpp"

namespace matchpoly {

void for_each_submask_ordered(VertexMask universe, const std::function<bool(VertexMask)>& visit) {
    std::vector<int> pos = mask_to_vertices(universe);
    const int u = static_cast<int>(pos.size());
    auto expand = [&](VertexMask compact) {
        VertexMask m = 0;
        while (compact) {
            int i = std::countr_zero(compact);
            compact &= compact - 1;
            m |= mask_bit(pos[static_cast<std::size_t>(i)]);
        }
        return m;
    };
    for (int k = 0; k <= u; ++k) {
        if (k == 0) {
            if (!visit(0)) return;
            continue;
        }
        VertexMask compact = (VertexMask{1} << k) - 1;
        const VertexMask limit = u == 64 ? ~VertexMask{0} : (VertexMask{1} << u) - 1;
        while (compact <= limit) {
            if (!visit(expand(compact))) return;
            // Gosper's hack: next mask with the same popcount.
            VertexMask c = compact & -compact;
            VertexMask r = compact + c;
            if (r > limit || r == 0) break;
            compact = (((r ^ compact) >> 2) / c) | r;
        }
    }
}

BarrierLab::BarrierLab(const MatchingTable& table, const ThetaSpec& theta, bool allow_large_scans)
    : table_(table), theta_(table, theta), allow_large_scans_(allow_large_scans) {
    if (!theta.is_zero()) zero_.emplace(table, ThetaSpec::zero());
}

void BarrierLab::require_scan_allowed(const char* what) const {
    int n = table_.graph().vertex_count();
    if (n > kEnumerationCap && !allow_large_scans_)
        throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the cap " +
                          std::to_string(kEnumerationCap) + "; pass the override to proceed");
}

bool BarrierLab::is_theta_barrier(VertexMask x) const {
    return theta_.critical_component_count(x) - mask_size(x) == theta_.multiplicity();
}

bool BarrierLab::is_theta_extreme(VertexMask x) const {
    VertexMask full = table_.graph().full_mask();
    return theta_.multiplicity(full & ~x) == theta_.multiplicity() + mask_size(x);
}

bool BarrierLab::is_classical_barrier(VertexMask x) const {
    VertexMask full = table_.graph().full_mask();
    return odd_component_count(table_.graph(), full & ~x) - mask_size(x) == zero_analyzer().multiplicity();
}

bool BarrierLab::is_zero_barrier(VertexMask x) const {
    return zero_analyzer().critical_component_count(x) - mask_size(x) == zero_analyzer().multiplicity();
}

BarrierReport BarrierLab::report_for(VertexMask x) const {
    const VertexMask full = table_.graph().full_mask();
    if ((x & ~full) != 0) throw std::domain_error("barrier report: set is not a subset of V(G)");
    BarrierReport r;
    r.set = x;
    r.size = mask_size(x);
    r.c_theta = theta_.critical_component_count(x);
    r.c_odd = odd_component_count(table_.graph(), full & ~x);
    r.theta_barrier = r.c_theta - r.size == theta_.multiplicity();
    r.theta_extreme = is_theta_extreme(x);
    r.classical_barrier = r.c_odd - r.size == zero_analyzer().multiplicity();
    r.zero_barrier = is_zero_barrier(x);
    return r;
}

DeficiencyResult BarrierLab::theta_deficiency() const {
    require_scan_allowed("theta_deficiency");
    const Graph& g = table_.graph();
    const VertexMask full = g.full_mask();
    DeficiencyResult best;
    best.value = theta_.critical_components_in(full);  // X = 0
    best.witness = 0;
    for (VertexMask x = 1; x <= full && full != 0; ++x) {
        int parts = static_cast<int>(components(g, full & ~x).size());
        if (parts - mask_size(x) <= best.value) continue;  // cannot strictly beat
        int value = theta_.critical_component_count(x) - mask_size(x);
        if (value > best.value) {
            best.value = value;
            best.witness = x;
        }
    }
    int mult = theta_.multiplicity();
    if (best.value != mult) {
        std::ostringstream diag;
        diag << "deficiency " << best.value << " at witness mask " << best.witness
             << " disagrees with mult " << mult << " (theta " << theta_.theta().minpoly().to_text()
             << ")";
        throw InternalError(diag.str());
    }
    return best;
}

std::vector<BarrierReport> BarrierLab::enumerate_barrier_sets(EnumMode mode) const {
    require_scan_allowed("enumerate_barrier_sets");
    VertexMask universe = table_.graph().full_mask();
    if (mode == EnumMode::Pruned) universe = theta_.decompose().Q();

    std::vector<BarrierReport> out;
    for_each_submask_ordered(universe, [&](VertexMask x) {
        if (theta_.critical_component_count(x) - mask_size(x) == theta_.multiplicity())
            out.push_back(report_for(x));
        return true;
    });
    for (auto& r : out) {
        r.maximal_theta_barrier =
            std::none_of(out.begin(), out.end(), [&](const BarrierReport& s) {
                return s.set != r.set && (s.set & r.set) == r.set;
            });
    }
    return out;
}

std::vector<VertexMask> BarrierLab::enumerate_extreme_sets() const {
    require_scan_allowed("enumerate_extreme_sets");
    VertexMask universe = table_.graph().full_mask();

    std::vector<VertexMask> out;
    for_each_submask_ordered(universe, [&](VertexMask x) {
        if (is_theta_extreme(x)) out.push_back(x);
        return true;
    });
    std::unordered_set<VertexMask> family(out.begin(), out.end());
    for (VertexMask x : out) {
        VertexMask rest = x;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (!family.contains(x & ~mask_bit(u)))
                throw InternalError("theta-extreme family is not downward-closed at mask " +
                                    std::to_string(x));
        }
    }
    return out;
}

std::vector<VertexMask> BarrierLab::maximal_barrier_sets() const {
    std::vector<VertexMask> out;
    for (const BarrierReport& r : enumerate_barrier_sets(EnumMode::Pruned))
        if (r.maximal_theta_barrier) out.push_back(r.set);
    return out;
}

VertexMask BarrierLab::extend_extreme_to_barrier(VertexMask x) const {
    if (!is_theta_extreme(x))
        throw std::domain_error("extend_extreme_to_barrier: the set is not theta-extreme");
    const VertexMask full = table_.graph().full_mask();
    VertexMask completion = theta_.decompose(full & ~x).A | x;
    if (!is_theta_barrier(completion) || (completion & x) != x)
        throw InternalError("extreme-set completion failed to produce a containing barrier");
    return completion;
}

MaximalIntersection BarrierLab::intersect_maximal_barriers() const {
    std::vector<VertexMask> maximal = maximal_barrier_sets();
    MaximalIntersection result;
    result.intersection = table_.graph().full_mask();
    for (VertexMask m : maximal) result.intersection &= m;
    if (maximal.empty()) result.intersection = 0;  // cannot happen: A_theta is always a barrier

    Decomposition dec = theta_.decompose();
    result.n_theta_empty = dec.N == 0;
    result.equals_a_theta = result.intersection == dec.A;
    if (result.n_theta_empty && !result.equals_a_theta)
        throw InternalError("intersection of maximal barriers differs from A_theta with empty N_theta");
    return result;
}

}  // namespace matchpoly
