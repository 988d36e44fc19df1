#include "matchpoly/decomposition.hpp"

#include <stdexcept>
#include <utility>

#include "matchpoly/errors.hpp"

namespace matchpoly {

std::string to_string(VertexKind kind) {
    switch (kind) {
        case VertexKind::Essential: return "essential";
        case VertexKind::Neutral: return "neutral";
        case VertexKind::Positive: return "positive";
    }
    return "?";
}

ThetaAnalyzer::ThetaAnalyzer(const MatchingTable& table, ThetaSpec theta)
    : table_(table), theta_(std::move(theta)) {}

void ThetaAnalyzer::check_subset(VertexMask live) const {
    if ((live & ~table_.graph().full_mask()) != 0)
        throw std::domain_error("theta analysis: set is not a subset of V(G)");
}

int ThetaAnalyzer::mult_impl(VertexMask live) const {
    if (auto it = mult_cache_.find(live); it != mult_cache_.end()) return it->second;
    int m = root_multiplicity(table_.mu(live), theta_);
    mult_cache_.emplace(live, m);
    return m;
}

int ThetaAnalyzer::multiplicity(VertexMask live) const {
    check_subset(live);
    std::lock_guard lock(mutex_);
    return mult_impl(live);
}

VertexClass ThetaAnalyzer::classify_impl(VertexMask live, int u) const {
    int with = mult_impl(live);
    int without = mult_impl(live & ~mask_bit(u));
    int step = without - with;
    if (step < -1 || step > 1)
        throw InternalError("multiplicity stepped by " + std::to_string(step) +
                            " under deletion of vertex " + std::to_string(u));
    VertexClass c;
    c.kind = step == -1 ? VertexKind::Essential
                        : (step == 0 ? VertexKind::Neutral : VertexKind::Positive);
    if (c.kind != VertexKind::Essential) {
        VertexMask nb = table_.graph().neighbors(u) & live;
        while (nb && !c.special) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (mult_impl(live & ~mask_bit(w)) == with - 1) c.special = true;
        }
    }
    return c;
}

VertexClass ThetaAnalyzer::classify_vertex(VertexMask live, int u) const {
    check_subset(live);
    if (!mask_contains(live, u))
        throw std::domain_error("classify_vertex: vertex not in the set");
    std::lock_guard lock(mutex_);
    return classify_impl(live, u);
}

Decomposition ThetaAnalyzer::decompose_impl(VertexMask live) const {
    Decomposition d;
    d.mult = mult_impl(live);
    VertexMask rest = live;
    while (rest) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        VertexClass c = classify_impl(live, u);
        switch (c.kind) {
            case VertexKind::Essential: d.D |= mask_bit(u); break;
            case VertexKind::Neutral:
                if (c.special)
                    throw InternalError("special vertex " + std::to_string(u) + " is neutral");
                d.N |= mask_bit(u);
                break;
            case VertexKind::Positive:
                (c.special ? d.A : d.P) |= mask_bit(u);
                break;
        }
    }
    if (d.mult == 0 && (d.D != 0 || d.A != 0))
        throw InternalError("mult 0 decomposition with nonempty D or A");
    if (theta_.is_zero() && d.N != 0)
        throw InternalError("0-neutral vertex found");
    return d;
}

Decomposition ThetaAnalyzer::decompose(VertexMask live) const {
    check_subset(live);
    std::lock_guard lock(mutex_);
    return decompose_impl(live);
}

bool ThetaAnalyzer::critical_impl(VertexMask live) const {
    if (auto it = critical_cache_.find(live); it != critical_cache_.end()) return it->second;
    bool crit = mult_impl(live) == 1;
    if (crit) {
        VertexMask rest = live;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (mult_impl(live & ~mask_bit(u)) != 0) {
                crit = false;
                break;
            }
        }
    }
    critical_cache_.emplace(live, crit);
    return crit;
}

bool ThetaAnalyzer::is_theta_critical(VertexMask live) const {
    check_subset(live);
    if (live == 0) throw std::domain_error("is_theta_critical: empty vertex set");
    std::lock_guard lock(mutex_);
    return critical_impl(live);
}

int ThetaAnalyzer::components_impl(VertexMask live) const {
    if (auto it = count_cache_.find(live); it != count_cache_.end()) return it->second;
    int count = 0;
    for (VertexMask comp : components(table_.graph(), live))
        if (critical_impl(comp)) ++count;
    count_cache_.emplace(live, count);
    return count;
}

int ThetaAnalyzer::critical_components_in(VertexMask live) const {
    check_subset(live);
    std::lock_guard lock(mutex_);
    return components_impl(live);
}

int ThetaAnalyzer::critical_component_count(VertexMask deleted) const {
    check_subset(deleted);
    return critical_components_in(table_.graph().full_mask() & ~deleted);
}

}  // namespace matchpoly
