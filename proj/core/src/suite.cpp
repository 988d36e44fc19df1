#include "matchpoly/suite.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "matchpoly/errors.hpp"

namespace matchpoly {

IntPoly mu_brute_force(const Graph& g) {
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > 24) throw std::domain_error("mu_brute_force: more than 24 edges");
    const int n = g.vertex_count();

    std::vector<std::uint64_t> p(static_cast<std::size_t>(n / 2) + 1, 0);
    std::vector<VertexMask> ends(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
        ends[e] = mask_bit(edges[e].first) | mask_bit(edges[e].second);

    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
        VertexMask used = 0;
        int r = 0;
        bool matching = true;
        for (std::uint64_t rest = sub; rest; rest &= rest - 1) {
            int e = std::countr_zero(rest);
            if (used & ends[static_cast<std::size_t>(e)]) {
                matching = false;
                break;
            }
            used |= ends[static_cast<std::size_t>(e)];
            ++r;
        }
        if (matching) ++p[static_cast<std::size_t>(r)];
    }

    std::vector<mpz_class> asc(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 0; 2 * r <= n; ++r) {
        mpz_class value(static_cast<unsigned long>(p[static_cast<std::size_t>(r)]));
        asc[static_cast<std::size_t>(n - 2 * r)] = (r % 2 == 1) ? mpz_class(-value) : value;
    }
    return IntPoly(std::move(asc));
}

// ---------------------------------------------------------------- corpora

Corpus exhaustive_corpus_single(int n) {
    LabeledGraphStream stream = LabeledGraphStream::exhaustive(n);
    Corpus c;
    c.description = "all labeled graphs on " + std::to_string(n) + " vertices";
    c.size = stream.size();
    c.get = [n](std::uint64_t i) { return graph_from_edge_bits(n, i); };
    return c;
}

Corpus exhaustive_corpus(int nmax) {
    if (nmax < 0 || nmax > 7)
        throw std::domain_error("exhaustive corpus supports 0 <= nmax <= 7");
    std::vector<std::uint64_t> offsets;
    std::uint64_t total = 0;
    for (int n = 0; n <= nmax; ++n) {
        offsets.push_back(total);
        total += std::uint64_t{1} << (n * (n - 1) / 2);
    }
    Corpus c;
    c.description = "all labeled graphs on 0.." + std::to_string(nmax) + " vertices";
    c.size = total;
    c.get = [offsets, nmax](std::uint64_t i) {
        int n = nmax;
        while (n > 0 && i < offsets[static_cast<std::size_t>(n)]) --n;
        return graph_from_edge_bits(n, i - offsets[static_cast<std::size_t>(n)]);
    };
    return c;
}

Corpus random_corpus(int n, double edge_probability, std::uint64_t count, std::uint64_t seed) {
    LabeledGraphStream stream = LabeledGraphStream::random(n, edge_probability, count, seed);
    std::ostringstream desc;
    desc << count << " random graphs G(" << n << ", " << edge_probability << "), seed " << seed;
    Corpus c;
    c.description = desc.str();
    c.size = count;
    c.get = [stream](std::uint64_t i) { return stream.at(i); };
    return c;
}

Corpus graph6_corpus(std::string_view text) {
    auto graphs = std::make_shared<std::vector<Graph>>();
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            graphs->push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    Corpus c;
    c.description = "graph6 corpus (" + std::to_string(graphs->size()) + " graphs)";
    c.size = graphs->size();
    c.get = [graphs](std::uint64_t i) { return (*graphs)[i]; };
    return c;
}

Corpus concat_corpora(std::vector<Corpus> parts, std::string description) {
    auto shared = std::make_shared<std::vector<Corpus>>(std::move(parts));
    std::uint64_t total = 0;
    auto offsets = std::make_shared<std::vector<std::uint64_t>>();
    for (const Corpus& p : *shared) {
        offsets->push_back(total);
        total += p.size;
    }
    Corpus c;
    c.description = std::move(description);
    c.size = total;
    c.get = [shared, offsets](std::uint64_t i) {
        std::size_t k = offsets->size();
        while (k > 0 && i < (*offsets)[k - 1]) --k;
        return (*shared)[k - 1].get(i - (*offsets)[k - 1]);
    };
    return c;
}

// ----------------------------------------------------------- check registry

namespace {

enum CheckId : std::size_t {
    kThm12a,
    kThm12b,
    kThm12c,
    kThm12d,
    kOracleMu,
    kRootBound,
    kCoeffSigns,
    kThm19,
    kLemma13,
    kEq1,
    kThm16,
    kThm17,
    kCor18i,
    kCor18ii,
    kCor18iii,
    kCor18iv,
    kThm33,
    kLemma34,
    kThm21,
    kThm21Upper,
    kProp23,
    kProp24,
    kLemma25,
    kLemma26,
    kLemma28,
    kLemma29,
    kLemma210,
    kLemma211,
    kThm212,
    kLemma31,
    kLemma32,
    kThm35,
    kThm36,
    kCor37,
    kSafePrunedEquiv,
    kProbeMultZero,
    kInternalTraps,
    kCheckCount,
};

struct CheckDef {
    const char* id;
    const char* statement;
};

constexpr std::array<CheckDef, kCheckCount> kRegistry{{
    {"thm_1_2_a", "Theorem 1.2(a): mu is multiplicative over components"},
    {"thm_1_2_b", "Theorem 1.2(b): mu(G) = mu(G-e) - mu(G\\{u,v}) for every edge"},
    {"thm_1_2_c", "Theorem 1.2(c): vertex recurrence for every vertex"},
    {"thm_1_2_d", "Theorem 1.2(d): mu' equals the sum of vertex-deleted mu"},
    {"oracle_mu", "mu from the recurrence equals brute-force matching enumeration"},
    {"root_bound", "all roots of mu lie in (-n, n)"},
    {"coeff_signs", "mu coefficients are (-1)^r p(G,r) with p(G,r) >= 0, p(G,0) = 1"},
    {"thm_1_9", "Theorem 1.9 (Berge): mult(0,G) = max_X c_odd(G\\X) - |X|"},
    {"lemma_1_3", "Lemma 1.3: vertex deletion changes mult by at most one"},
    {"eq_1", "Eq. (1): mult(theta, G\\X) >= c_theta(G\\X) for all X"},
    {"thm_1_6", "Theorem 1.6: deleting u in A_theta fixes D, P, N and removes u from A"},
    {"thm_1_7", "Theorem 1.7: connected with every vertex essential implies mult 1"},
    {"cor_1_8_i", "Corollary 1.8(i): G\\A_theta has empty A and unchanged D, P, N"},
    {"cor_1_8_ii", "Corollary 1.8(ii): c_theta(G\\A_theta) = |A_theta| + mult"},
    {"cor_1_8_iii", "Corollary 1.8(iii): components of G\\A_theta are critical or mult-0"},
    {"cor_1_8_iv", "Corollary 1.8(iv): critical components of G\\A_theta cover exactly D_theta"},
    {"thm_3_3", "Theorem 3.3: vertex-class transitions under deleting a positive vertex"},
    {"lemma_3_4", "Lemma 3.4: A_theta(G) contained in A_theta(G\\u) for positive non-special u"},
    {"thm_2_1", "Theorem 2.1 (generalized Berge): deficiency maximum equals mult"},
    {"thm_2_1_upper", "Theorem 2.1 upper bound: c_theta(G\\X) <= |X| + mult for all X"},
    {"prop_2_3", "Proposition 2.3: every 0-barrier set is a classical barrier set"},
    {"prop_2_4", "Proposition 2.4: maximal classical barriers are maximal 0-barriers"},
    {"lemma_2_5", "Lemma 2.5: the theta-extreme family is downward-closed"},
    {"lemma_2_6", "Lemma 2.6: X\\Y stays a barrier [extreme] set of G\\Y for Y inside X"},
    {"lemma_2_8", "Lemma 2.8: every theta-barrier set is theta-extreme"},
    {"lemma_2_9", "Lemma 2.9: components left by a barrier are critical or mult-0"},
    {"lemma_2_10", "Lemma 2.10: mult-0 components of maximal barriers are all-neutral, c_theta(H\\Y) <= |Y|-1"},
    {"lemma_2_11", "Lemma 2.11: theta-critical graphs have c_theta(G\\Y) <= |Y|-1 for nonempty Y"},
    {"thm_2_12", "Theorem 2.12: the intersection of two maximal barriers is a barrier"},
    {"lemma_3_1", "Lemma 3.1: barrier and extreme sets lie inside A_theta u P_theta"},
    {"lemma_3_2", "Lemma 3.2: a barrier contained in A_theta equals A_theta"},
    {"thm_3_5", "Theorem 3.5: A_theta is contained in every barrier and is itself one"},
    {"thm_3_6", "Theorem 3.6: with empty N_theta the maximal barriers intersect in A_theta"},
    {"cor_3_7", "Corollary 3.7: the maximal 0-barriers intersect in A_0"},
    {"safe_pruned_equiv", "safe and pruned barrier enumeration return the same family"},
    {"probe_mult_zero", "non-root probe theta has mult 0 and empty D, A"},
    {"internal_traps", "no internal invariant traps fired"},
}};

struct LocalAcc {
    std::array<std::uint64_t, kCheckCount> instances{};
    std::vector<std::pair<std::size_t, CheckFailure>> failures;
};

class Recorder {
public:
    Recorder(LocalAcc& acc, std::uint64_t index, std::string graph6)
        : acc_(acc), index_(index), graph6_(std::move(graph6)) {}

    template <typename DetailFn>
    void result(CheckId id, bool ok, const std::string& theta, DetailFn&& detail) {
        ++acc_.instances[id];
        if (!ok) acc_.failures.emplace_back(id, CheckFailure{index_, graph6_, theta, detail()});
    }
    void fail(CheckId id, const std::string& theta, std::string detail) {
        ++acc_.instances[id];
        acc_.failures.emplace_back(id, CheckFailure{index_, graph6_, theta, std::move(detail)});
    }

private:
    LocalAcc& acc_;
    std::uint64_t index_;
    std::string graph6_;
};

std::string mask_text(VertexMask m) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : mask_to_vertices(m)) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << '}';
    return out.str();
}

VertexKind kind_of(const ThetaAnalyzer& an, VertexMask live, int v) {
    int step = an.multiplicity(live & ~mask_bit(v)) - an.multiplicity(live);
    if (step < -1 || step > 1)
        throw InternalError("multiplicity stepped by " + std::to_string(step));
    return step == -1 ? VertexKind::Essential
                      : (step == 0 ? VertexKind::Neutral : VertexKind::Positive);
}

void check_theta(const Graph& g, const MatchingTable& table, const ThetaSpec& theta,
                 const std::string& tt, bool is_probe, bool is_zero, const SuiteOptions& opt,
                 Recorder& rec) {
    const VertexMask full = g.full_mask();
    const int n = g.vertex_count();
    const bool all_subsets = n <= opt.all_subsets_max_n;

    ThetaAnalyzer an(table, theta);
    const int mult = an.multiplicity();

    {
        bool ok = true;
        int bad = -1;
        for (int u = 0; u < n; ++u) {
            int d = an.multiplicity(full & ~mask_bit(u)) - mult;
            if (d < -1 || d > 1) {
                ok = false;
                bad = u;
                break;
            }
        }
        rec.result(kLemma13, ok, tt, [&] { return "vertex " + std::to_string(bad); });
    }

    Decomposition dec = an.decompose();

    if (is_probe) {
        rec.result(kProbeMultZero, mult == 0 && dec.D == 0 && dec.A == 0, tt,
                   [&] { return "mult " + std::to_string(mult); });
    }

    if (all_subsets) {
        bool eq1 = true, upper = true;
        VertexMask bad1 = 0, bad2 = 0;
        for (VertexMask x = 0;; ++x) {
            VertexMask live = full & ~x;
            int ct = an.critical_components_in(live);
            if (eq1 && an.multiplicity(live) < ct) {
                eq1 = false;
                bad1 = x;
            }
            if (upper && ct - mask_size(x) > mult) {
                upper = false;
                bad2 = x;
            }
            if (x == full) break;
        }
        rec.result(kEq1, eq1, tt, [&] { return "X = " + mask_text(bad1); });
        rec.result(kThm21Upper, upper, tt, [&] { return "X = " + mask_text(bad2); });
    }

    if (n >= 1 && dec.D == full && is_connected(g)) {
        rec.result(kThm17, mult == 1, tt, [&] { return "mult " + std::to_string(mult); });
    }

    {
        bool ok = true;
        int bad = -1;
        for (int u : mask_to_vertices(dec.A)) {
            Decomposition d2 = an.decompose(full & ~mask_bit(u));
            if (!(d2.D == dec.D && d2.P == dec.P && d2.N == dec.N &&
                  d2.A == (dec.A & ~mask_bit(u)))) {
                ok = false;
                bad = u;
                break;
            }
        }
        rec.result(kThm16, ok, tt, [&] { return "vertex " + std::to_string(bad); });
    }

    {
        VertexMask live = full & ~dec.A;
        Decomposition d2 = an.decompose(live);
        rec.result(kCor18i, d2.A == 0 && d2.D == dec.D && d2.P == dec.P && d2.N == dec.N, tt,
                   [&] { return "decomposition of G\\A differs"; });
        int ct = an.critical_components_in(live);
        rec.result(kCor18ii, ct == mask_size(dec.A) + mult, tt, [&] {
            return "c_theta " + std::to_string(ct) + " != |A| + mult = " +
                   std::to_string(mask_size(dec.A) + mult);
        });
        bool iii = true;
        VertexMask critical_union = 0;
        VertexMask bad_comp = 0;
        for (VertexMask comp : components(g, live)) {
            if (an.is_theta_critical(comp))
                critical_union |= comp;
            else if (an.multiplicity(comp) != 0) {
                iii = false;
                bad_comp = comp;
            }
        }
        rec.result(kCor18iii, iii, tt, [&] { return "component " + mask_text(bad_comp); });
        rec.result(kCor18iv, critical_union == dec.D, tt,
                   [&] { return "critical union " + mask_text(critical_union) + " != D"; });
    }

    if (mult >= 1) {
        bool ok = true;
        std::string witness;
        for (int u : mask_to_vertices(dec.Q())) {
            VertexMask live2 = full & ~mask_bit(u);
            for (int v : mask_to_vertices(live2)) {
                VertexKind before = kind_of(an, full, v);
                VertexKind after = kind_of(an, live2, v);
                bool fine = false;
                switch (before) {
                    case VertexKind::Essential: fine = after == VertexKind::Essential; break;
                    case VertexKind::Positive:
                        fine = after == VertexKind::Essential || after == VertexKind::Positive;
                        break;
                    case VertexKind::Neutral:
                        fine = after == VertexKind::Essential || after == VertexKind::Neutral;
                        break;
                }
                if (!fine) {
                    ok = false;
                    witness = "delete " + std::to_string(u) + ", vertex " + std::to_string(v) +
                              " went " + to_string(before) + " -> " + to_string(after);
                    break;
                }
            }
            if (!ok) break;
        }
        rec.result(kThm33, ok, tt, [&] { return witness; });
    }

    {
        bool ok = true;
        int bad = -1;
        for (int u : mask_to_vertices(dec.P)) {
            Decomposition d3 = an.decompose(full & ~mask_bit(u));
            if ((dec.A & ~d3.A) != 0) {
                ok = false;
                bad = u;
                break;
            }
        }
        rec.result(kLemma34, ok, tt, [&] { return "vertex " + std::to_string(bad); });
    }

    BarrierLab lab(table, theta);
    try {
        DeficiencyResult def = lab.theta_deficiency();
        rec.result(kThm21, def.value == mult && lab.is_theta_barrier(def.witness), tt, [&] {
            return "deficiency " + std::to_string(def.value) + ", mult " + std::to_string(mult) +
                   ", witness " + mask_text(def.witness);
        });
    } catch (const InternalError& e) {
        rec.fail(kThm21, tt, e.what());
    }

    if (!all_subsets) return;

    // family checks
    std::vector<BarrierReport> family;
    try {
        const bool compare = n <= opt.safe_enum_max_n;
        family = lab.enumerate_barrier_sets(compare ? BarrierLab::EnumMode::Safe
                                                    : BarrierLab::EnumMode::Pruned);
        if (compare) {
            auto pruned = lab.enumerate_barrier_sets(BarrierLab::EnumMode::Pruned);
            bool same = pruned.size() == family.size();
            for (std::size_t i = 0; same && i < family.size(); ++i)
                same = family[i].set == pruned[i].set &&
                       family[i].maximal_theta_barrier == pruned[i].maximal_theta_barrier;
            rec.result(kSafePrunedEquiv, same, tt, [&] {
                return "safe family size " + std::to_string(family.size()) + ", pruned " +
                       std::to_string(pruned.size());
            });
        }
    } catch (const InternalError& e) {
        rec.fail(kInternalTraps, tt, e.what());
        return;
    }

    std::vector<VertexMask> extremes;
    try {
        extremes = lab.enumerate_extreme_sets();
        rec.result(kLemma25, true, tt, [] { return std::string(); });
    } catch (const InternalError& e) {
        rec.fail(kLemma25, tt, e.what());
        return;
    }

    {
        bool ok = true;
        VertexMask bad = 0;
        const VertexMask q = dec.Q();
        for (VertexMask x = 0;; ++x) {
            bool extreme = an.multiplicity(full & ~x) == mult + mask_size(x);
            bool barrier = an.critical_components_in(full & ~x) - mask_size(x) == mult;
            if ((extreme || barrier) && (x & ~q) != 0) {
                ok = false;
                bad = x;
                break;
            }
            if (x == full) break;
        }
        rec.result(kLemma31, ok, tt, [&] { return "X = " + mask_text(bad); });
    }

    std::unordered_set<VertexMask> barrier_masks;
    for (const auto& r : family) barrier_masks.insert(r.set);

    {
        bool contained = true, a_is_barrier = barrier_masks.contains(dec.A);
        VertexMask bad = 0;
        for (const auto& r : family) {
            if ((dec.A & ~r.set) != 0) {
                contained = false;
                bad = r.set;
                break;
            }
        }
        rec.result(kThm35, contained && a_is_barrier, tt, [&] {
            return contained ? "A_theta is not a barrier" : "barrier " + mask_text(bad);
        });
    }

    {
        bool ok = true;
        VertexMask bad = 0;
        for (const auto& r : family) {
            if ((r.set & ~dec.A) == 0 && r.set != dec.A) {
                ok = false;
                bad = r.set;
                break;
            }
        }
        rec.result(kLemma32, ok, tt, [&] { return "barrier " + mask_text(bad); });
    }

    {
        bool ok = true;
        VertexMask bad = 0;
        for (const auto& r : family) {
            if (!r.theta_extreme) {
                ok = false;
                bad = r.set;
                break;
            }
        }
        rec.result(kLemma28, ok, tt, [&] { return "barrier " + mask_text(bad); });
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& r : family) {
            for (VertexMask comp : components(g, full & ~r.set)) {
                if (!an.is_theta_critical(comp) && an.multiplicity(comp) != 0) {
                    ok = false;
                    witness = "barrier " + mask_text(r.set) + ", component " + mask_text(comp);
                    break;
                }
            }
            if (!ok) break;
        }
        rec.result(kLemma29, ok, tt, [&] { return witness; });
    }

    {
        // Lemma 2.6 for barriers and extremes: every Y inside X leaves
        // X\Y a barrier [extreme] set of G\Y.
        bool ok = true;
        std::string witness;
        for (const auto& r : family) {
            for (VertexMask y = r.set;; y = (y - 1) & r.set) {
                int expect = an.critical_components_in(full & ~r.set) - mask_size(r.set & ~y);
                if (an.multiplicity(full & ~y) != expect) {
                    ok = false;
                    witness = "barrier " + mask_text(r.set) + ", Y = " + mask_text(y);
                    break;
                }
                if (y == 0) break;
            }
            if (!ok) break;
        }
        for (VertexMask x : extremes) {
            if (!ok) break;
            for (VertexMask y = x;; y = (y - 1) & x) {
                if (an.multiplicity(full & ~x) !=
                    an.multiplicity(full & ~y) + mask_size(x & ~y)) {
                    ok = false;
                    witness = "extreme " + mask_text(x) + ", Y = " + mask_text(y);
                    break;
                }
                if (y == 0) break;
            }
        }
        rec.result(kLemma26, ok, tt, [&] { return witness; });
    }

    std::vector<VertexMask> maximal;
    for (const auto& r : family)
        if (r.maximal_theta_barrier) maximal.push_back(r.set);

    {
        bool ok = true;
        std::string witness;
        for (VertexMask x : maximal) {
            for (VertexMask comp : components(g, full & ~x)) {
                if (an.multiplicity(comp) != 0) continue;
                for (int v : mask_to_vertices(comp)) {
                    if (kind_of(an, comp, v) != VertexKind::Neutral) {
                        ok = false;
                        witness = "maximal " + mask_text(x) + ", vertex " + std::to_string(v);
                        break;
                    }
                }
                if (ok) {
                    for (VertexMask y = comp; y != 0; y = (y - 1) & comp) {
                        if (an.critical_components_in(comp & ~y) > mask_size(y) - 1) {
                            ok = false;
                            witness = "maximal " + mask_text(x) + ", Y = " + mask_text(y);
                            break;
                        }
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rec.result(kLemma210, ok, tt, [&] { return witness; });
    }

    if (n >= 1 && an.is_theta_critical(full)) {
        bool ok = true;
        VertexMask bad = 0;
        for (VertexMask y = full; y != 0; y = (y - 1) & full) {
            if (an.critical_components_in(full & ~y) > mask_size(y) - 1) {
                ok = false;
                bad = y;
                break;
            }
        }
        rec.result(kLemma211, ok, tt, [&] { return "Y = " + mask_text(bad); });
    }

    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < maximal.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < maximal.size(); ++j) {
                VertexMask z = maximal[i] & maximal[j];
                if (an.critical_components_in(full & ~z) - mask_size(z) != mult) {
                    ok = false;
                    witness = mask_text(maximal[i]) + " and " + mask_text(maximal[j]);
                    break;
                }
            }
        }
        rec.result(kThm212, ok, tt, [&] { return witness; });
    }

    if (dec.N == 0) {
        VertexMask inter = full;
        for (VertexMask x : maximal) inter &= x;
        bool ok = inter == dec.A;
        rec.result(kThm36, ok, tt,
                   [&] { return "intersection " + mask_text(inter) + " != A " + mask_text(dec.A); });
        if (is_zero)
            rec.result(kCor37, ok, tt, [&] {
                return "intersection " + mask_text(inter) + " != A " + mask_text(dec.A);
            });
    }

    if (is_zero) {
        {
            bool ok = true;
            VertexMask bad = 0;
            for (const auto& r : family) {
                if (!r.classical_barrier) {
                    ok = false;
                    bad = r.set;
                    break;
                }
            }
            rec.result(kProp23, ok, tt, [&] { return "0-barrier " + mask_text(bad); });
        }

        // classical family scan: Berge maximum plus maximal classical barriers
        std::vector<VertexMask> classical;
        int berge_max = 0;  // X = empty set gives c_odd >= 0
        for (VertexMask x = 0;; ++x) {
            int value = odd_component_count(g, full & ~x) - mask_size(x);
            if (value > berge_max) berge_max = value;
            if (value == mult) classical.push_back(x);
            if (x == full) break;
        }
        if (n >= 1) {
            rec.result(kThm19, berge_max == mult, tt, [&] {
                return "Berge max " + std::to_string(berge_max) + ", mult " + std::to_string(mult);
            });
        }
        // if mult != berge_max the classical list is wrong too, but thm_1_9
        // already reports that; prop_2_4 then checks what was collected
        {
            bool ok = true;
            VertexMask bad = 0;
            std::unordered_set<VertexMask> maximal_set(maximal.begin(), maximal.end());
            for (VertexMask x : classical) {
                bool is_max = std::none_of(classical.begin(), classical.end(), [&](VertexMask s) {
                    return s != x && (s & x) == x;
                });
                if (is_max && !maximal_set.contains(x)) {
                    ok = false;
                    bad = x;
                    break;
                }
            }
            rec.result(kProp24, ok, tt, [&] { return "maximal classical " + mask_text(bad); });
        }
    }
}

void check_graph(const Graph& g, std::uint64_t index, const SuiteOptions& opt, LocalAcc& acc) {
    Recorder rec(acc, index, emit_graph6(g));
    const int n = g.vertex_count();
    try {
        MatchingTable table(g);

        IdentityReport ir = verify_identities(table);
        rec.result(kThm12a, ir.component_product.pass, "", [&] { return ir.component_product.witness; });
        rec.result(kThm12b, ir.edge_rule.pass, "", [&] { return ir.edge_rule.witness; });
        rec.result(kThm12c, ir.vertex_rule.pass, "", [&] { return ir.vertex_rule.witness; });
        rec.result(kThm12d, ir.derivative_sum.pass, "", [&] { return ir.derivative_sum.witness; });

        if (g.edge_count() <= opt.oracle_edge_cap) {
            rec.result(kOracleMu, mu_brute_force(g) == table.mu(), "",
                       [&] { return "oracle " + mu_brute_force(g).to_text() + " vs " + table.mu().to_text(); });
        }

        if (n >= 1) {
            mpz_class at_hi = table.mu().eval(n);
            mpz_class at_lo = table.mu().eval(-n);
            bool ok = at_hi > 0 && (n % 2 == 0 ? at_lo > 0 : at_lo < 0);
            rec.result(kRootBound, ok, "", [&] {
                return "mu(n) = " + at_hi.get_str() + ", mu(-n) = " + at_lo.get_str();
            });
        }

        {
            bool ok = table.mu().coeff(n) == 1;
            for (int k = 0; k <= n && ok; ++k) {
                const mpz_class& c = table.mu().coeff(k);
                if ((n - k) % 2 == 1) {
                    ok = c == 0;
                } else {
                    ok = ((n - k) / 2 % 2 == 1) ? c <= 0 : c >= 0;
                }
            }
            rec.result(kCoeffSigns, ok, "", [&] { return "mu = " + table.mu().to_text(); });
        }

        std::vector<ThetaSpec> thetas;
        thetas.push_back(ThetaSpec::zero());
        if (opt.policy == ThetaPolicy::CandidatesDeg2) {
            for (ThetaSpec& cand : find_theta_candidates(table.mu(), 2)) {
                bool dup = false;
                for (const ThetaSpec& t : thetas) dup = dup || t.same_theta(cand);
                if (!dup) thetas.push_back(std::move(cand));
            }
        } else if (opt.policy == ThetaPolicy::ExplicitList) {
            for (const ThetaSpec& cand : opt.explicit_thetas) {
                bool dup = false;
                for (const ThetaSpec& t : thetas) dup = dup || t.same_theta(cand);
                if (!dup) thetas.push_back(cand);
            }
        }
        thetas.push_back(ThetaSpec::from_integer(n + 1, "probe"));
        const std::size_t probe_index = thetas.size() - 1;

        for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
            const std::string tt = thetas[ti].minpoly().to_text();
            try {
                check_theta(g, table, thetas[ti], tt, ti == probe_index, ti == 0, opt, rec);
            } catch (const InternalError& e) {
                rec.fail(kInternalTraps, tt, e.what());
            }
        }
    } catch (const std::exception& e) {
        rec.fail(kInternalTraps, "", std::string("unexpected: ") + e.what());
    }
}

std::string policy_text(const SuiteOptions& opt) {
    switch (opt.policy) {
        case ThetaPolicy::ZeroOnly: return "zero-only";
        case ThetaPolicy::CandidatesDeg2: return "all-candidates-deg2";
        case ThetaPolicy::ExplicitList:
            return "explicit(" + std::to_string(opt.explicit_thetas.size()) + ")";
    }
    return "?";
}

}  // namespace

bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass()) return false;
    return true;
}

const CheckResult* SuiteReport::find(std::string_view id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

nlohmann::ordered_json SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["corpus"] = corpus;
    j["policy"] = policy;
    j["graphs"] = graphs;
    j["pass"] = pass();
    j["runtime_seconds"] = runtime_seconds;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["statement"] = c.statement;
        cj["instances"] = c.instances;
        cj["pass"] = c.pass();
        auto fails = nlohmann::ordered_json::array();
        for (const auto& f : c.failures) {
            fails.push_back({{"graph_index", f.graph_index},
                             {"graph6", f.graph6},
                             {"theta", f.theta},
                             {"detail", f.detail}});
        }
        cj["failures"] = std::move(fails);
        cj["failures_suppressed"] = c.failures_suppressed;
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    return j;
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    out << "corpus: " << corpus << "\n";
    out << "policy: " << policy << "\n";
    out << "graphs: " << graphs << "\n";
    for (const auto& c : checks) {
        out << (c.pass() ? "[PASS] " : "[FAIL] ") << c.statement << " (instances=" << c.instances;
        if (!c.pass()) out << ", failures=" << c.failures.size() + c.failures_suppressed;
        out << ")\n";
        for (const auto& f : c.failures) {
            out << "       graph " << f.graph_index << " " << f.graph6;
            if (!f.theta.empty()) out << " theta[" << f.theta << "]";
            if (!f.detail.empty()) out << " : " << f.detail;
            out << "\n";
        }
    }
    out << (pass() ? "SUITE PASS" : "SUITE FAIL") << " in " << runtime_seconds << "s\n";
    return out.str();
}

SuiteReport run_suite(const Corpus& corpus, const SuiteOptions& options) {
    auto start = std::chrono::steady_clock::now();
    const std::uint64_t size = corpus.size;
    const int jobs = std::max(1, options.jobs);
    const std::uint64_t chunk = 512;
    const std::uint64_t nchunks = size == 0 ? 0 : (size + chunk - 1) / chunk;

    std::vector<LocalAcc> per_chunk(nchunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            std::uint64_t lo = c * chunk, hi = std::min(size, lo + chunk);
            for (std::uint64_t i = lo; i < hi; ++i)
                check_graph(corpus.get(i), i, options, per_chunk[c]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SuiteReport rep;
    rep.corpus = corpus.description;
    rep.policy = policy_text(options);
    rep.graphs = size;
    rep.checks.resize(kCheckCount);
    for (std::size_t k = 0; k < kCheckCount; ++k) {
        rep.checks[k].id = kRegistry[k].id;
        rep.checks[k].statement = kRegistry[k].statement;
    }
    for (const LocalAcc& acc : per_chunk) {
        for (std::size_t k = 0; k < kCheckCount; ++k) rep.checks[k].instances += acc.instances[k];
        for (const auto& [k, f] : acc.failures) {
            if (rep.checks[k].failures.size() < options.failure_cap)
                rep.checks[k].failures.push_back(f);
            else
                ++rep.checks[k].failures_suppressed;
        }
    }
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// ------------------------------------------------------------------ hunts

std::string to_string(HuntTarget target) {
    switch (target) {
        case HuntTarget::BarrierNotZeroBarrier: return "barrier_not_zero_barrier";
        case HuntTarget::ExtremeNotBarrier: return "extreme_not_barrier";
        case HuntTarget::BarrierFamilyNotClosed: return "barrier_family_not_closed";
        case HuntTarget::SpecialIntersectionGap: return "special_intersection_gap";
    }
    return "?";
}

std::optional<HuntTarget> hunt_target_from_string(std::string_view id) {
    if (id == "barrier_not_zero_barrier") return HuntTarget::BarrierNotZeroBarrier;
    if (id == "extreme_not_barrier") return HuntTarget::ExtremeNotBarrier;
    if (id == "barrier_family_not_closed") return HuntTarget::BarrierFamilyNotClosed;
    if (id == "special_intersection_gap") return HuntTarget::SpecialIntersectionGap;
    return std::nullopt;
}

namespace {

std::optional<HuntWitness> hunt_graph(HuntTarget target, const Graph& g, std::uint64_t index) {
    const VertexMask full = g.full_mask();
    const int n = g.vertex_count();
    MatchingTable table(g);
    ThetaSpec zero = ThetaSpec::zero();

    auto make_witness = [&](const ThetaSpec& theta, std::vector<VertexMask> sets,
                            std::string note) {
        HuntWitness w;
        w.graph_index = index;
        w.n = n;
        w.graph6 = emit_graph6(g);
        w.theta_minpoly = theta.minpoly().to_text();
        w.theta_label = theta.label();
        for (VertexMask m : sets) w.sets.push_back(mask_to_vertices(m));
        w.note = std::move(note);
        return w;
    };

    if (target == HuntTarget::BarrierNotZeroBarrier || target == HuntTarget::ExtremeNotBarrier) {
        ThetaAnalyzer an(table, zero);
        const int mult0 = an.multiplicity();
        std::optional<VertexMask> hit;
        for_each_submask_ordered(full, [&](VertexMask x) {
            bool zero_barrier = an.critical_components_in(full & ~x) - mask_size(x) == mult0;
            if (zero_barrier) return true;
            bool qualifies;
            if (target == HuntTarget::BarrierNotZeroBarrier)
                qualifies = odd_component_count(g, full & ~x) - mask_size(x) == mult0;
            else
                qualifies = an.multiplicity(full & ~x) == mult0 + mask_size(x);
            if (qualifies) {
                hit = x;
                return false;
            }
            return true;
        });
        if (hit) {
            const char* note = target == HuntTarget::BarrierNotZeroBarrier
                                   ? "classical barrier set that is not a 0-barrier set"
                                   : "0-extreme set that is not a 0-barrier set";
            return make_witness(zero, {*hit}, note);
        }
        return std::nullopt;
    }

    if (target == HuntTarget::BarrierFamilyNotClosed) {
        ThetaAnalyzer an(table, zero);
        const int mult0 = an.multiplicity();
        auto is_zb = [&](VertexMask x) {
            return an.critical_components_in(full & ~x) - mask_size(x) == mult0;
        };
        BarrierLab lab(table, zero);
        auto family = lab.enumerate_barrier_sets(BarrierLab::EnumMode::Pruned);
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                VertexMask a = family[i].set, b = family[j].set;
                VertexMask u = a | b, z = a & b;
                if (!is_zb(u) && !is_zb(z)) {
                    return make_witness(zero, {a, b, u, z},
                                        "0-barriers X2, X3 with non-barrier union and intersection");
                }
            }
        }
        return std::nullopt;
    }

    // SpecialIntersectionGap: theta pool from mu(G) and every mu(G\v);
    // theta need not be a root of mu(G) itself (mult 0 is allowed).
    std::vector<ThetaSpec> pool = find_theta_candidates(table.mu(), 2);
    for (int v = 0; v < n; ++v) {
        for (ThetaSpec& cand : find_theta_candidates(table.mu(full & ~mask_bit(v)), 2)) {
            bool dup = false;
            for (const ThetaSpec& t : pool) dup = dup || t.same_theta(cand);
            if (!dup) pool.push_back(std::move(cand));
        }
    }
    for (const ThetaSpec& theta : pool) {
        if (theta.is_zero()) continue;  // N_0 is always empty
        ThetaAnalyzer an(table, theta);
        Decomposition dec = an.decompose();
        if (dec.N == 0) continue;
        BarrierLab lab(table, theta);
        MaximalIntersection mi = lab.intersect_maximal_barriers();
        if (!mi.equals_a_theta) {
            return make_witness(theta, {mi.intersection, dec.A},
                                "N_theta nonempty; intersection of maximal theta-barriers differs "
                                "from A_theta");
        }
    }
    return std::nullopt;
}

}  // namespace

bool verify_hunt_witness(HuntTarget target, const HuntWitness& witness) {
    Graph g = parse_graph6(witness.graph6);
    MatchingTable table(g);
    ThetaSpec theta(IntPoly::parse_text(witness.theta_minpoly), witness.theta_label);
    BarrierLab lab(table, theta);
    auto set_at = [&](std::size_t i) { return mask_of(witness.sets.at(i)); };

    switch (target) {
        case HuntTarget::BarrierNotZeroBarrier:
            return witness.sets.size() == 1 && lab.is_classical_barrier(set_at(0)) &&
                   !lab.is_zero_barrier(set_at(0));
        case HuntTarget::ExtremeNotBarrier:
            return witness.sets.size() == 1 && theta.is_zero() && lab.is_theta_extreme(set_at(0)) &&
                   !lab.is_theta_barrier(set_at(0));
        case HuntTarget::BarrierFamilyNotClosed:
            return witness.sets.size() == 4 && theta.is_zero() && lab.is_theta_barrier(set_at(0)) &&
                   lab.is_theta_barrier(set_at(1)) &&
                   set_at(2) == (set_at(0) | set_at(1)) && set_at(3) == (set_at(0) & set_at(1)) &&
                   !lab.is_theta_barrier(set_at(2)) && !lab.is_theta_barrier(set_at(3));
        case HuntTarget::SpecialIntersectionGap: {
            Decomposition dec = lab.analyzer().decompose();
            if (dec.N == 0) return false;
            MaximalIntersection mi = lab.intersect_maximal_barriers();
            return witness.sets.size() == 2 && !mi.equals_a_theta &&
                   mi.intersection == set_at(0) && dec.A == set_at(1);
        }
    }
    return false;
}

HuntReport hunt_counterexamples(HuntTarget target, int n_max, int want, int jobs) {
    if (n_max < 1 || n_max > 8)
        throw std::domain_error("hunt: n_max must be in [1, 8]");
    if (want < 1) throw std::domain_error("hunt: want must be >= 1");
    auto start = std::chrono::steady_clock::now();

    HuntReport rep;
    rep.target = target;
    rep.n_max = n_max;
    rep.requested = want;
    jobs = std::max(1, jobs);

    for (int n = 1; n <= n_max && static_cast<int>(rep.found.size()) < want; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        const std::uint64_t block = 65536;
        for (std::uint64_t lo = 0; lo < total && static_cast<int>(rep.found.size()) < want;
             lo += block) {
            const std::uint64_t hi = std::min(total, lo + block);
            std::vector<std::vector<HuntWitness>> per_thread(static_cast<std::size_t>(jobs));
            std::vector<std::thread> pool;
            const std::uint64_t span = hi - lo;
            for (int t = 0; t < jobs; ++t) {
                std::uint64_t a = lo + span * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(jobs);
                std::uint64_t b = lo + span * (static_cast<std::uint64_t>(t) + 1) / static_cast<std::uint64_t>(jobs);
                pool.emplace_back([&, t, a, b] {
                    auto& local = per_thread[static_cast<std::size_t>(t)];
                    for (std::uint64_t i = a; i < b && static_cast<int>(local.size()) < want; ++i) {
                        if (auto w = hunt_graph(target, graph_from_edge_bits(n, i), i)) {
                            local.push_back(std::move(*w));
                        }
                    }
                });
            }
            for (auto& t : pool) t.join();
            rep.scanned += span;
            std::vector<HuntWitness> merged;
            for (auto& local : per_thread)
                for (auto& w : local) merged.push_back(std::move(w));
            std::sort(merged.begin(), merged.end(),
                      [](const HuntWitness& a, const HuntWitness& b) {
                          return a.graph_index < b.graph_index;
                      });
            for (auto& w : merged) {
                if (static_cast<int>(rep.found.size()) >= want) break;
                rep.found.push_back(std::move(w));
            }
        }
    }

    for (const HuntWitness& w : rep.found) {
        if (!verify_hunt_witness(target, w))
            throw InternalError("hunt witness failed re-verification for target " +
                                to_string(target));
    }
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

nlohmann::ordered_json HuntReport::to_json() const {
    nlohmann::ordered_json j;
    j["target"] = matchpoly::to_string(target);
    j["n_max"] = n_max;
    j["requested"] = requested;
    j["found_count"] = found.size();
    j["pass"] = ok();
    j["scanned"] = scanned;
    j["runtime_seconds"] = runtime_seconds;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& w : found) {
        nlohmann::ordered_json wj;
        wj["graph6"] = w.graph6;
        wj["n"] = w.n;
        wj["graph_index"] = w.graph_index;
        wj["theta"] = {{"minpoly", w.theta_minpoly}, {"label", w.theta_label}};
        wj["sets"] = w.sets;
        wj["note"] = w.note;
        arr.push_back(std::move(wj));
    }
    j["found"] = std::move(arr);
    return j;
}

std::string HuntReport::to_text() const {
    std::ostringstream out;
    out << "hunt " << matchpoly::to_string(target) << " up to n=" << n_max << ": ";
    if (ok())
        out << "found " << found.size() << " witness(es)";
    else
        out << "not found (scanned " << scanned << " graphs)";
    out << " in " << runtime_seconds << "s\n";
    for (const auto& w : found) {
        out << "  graph6 " << w.graph6 << " (n=" << w.n << "), theta[" << w.theta_minpoly << "] "
            << w.theta_label << ", sets:";
        for (const auto& s : w.sets) {
            out << " {";
            for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
            out << "}";
        }
        out << "\n    " << w.note << "\n";
    }
    return out.str();
}

}  // namespace matchpoly
