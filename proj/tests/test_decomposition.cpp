#include <random>

#include "doctest.h"
#include "matchpoly/decomposition.hpp"
#include "matchpoly/errors.hpp"

using namespace matchpoly;

namespace {

IntPoly poly(std::vector<long> desc) {
    std::vector<mpz_class> c;
    for (long v : desc) c.emplace_back(v);
    return IntPoly::from_desc(std::move(c));
}

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph star3() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

const ThetaSpec kSqrt3{poly({1, 0, -3}), "sqrt3"};

}  // namespace

TEST_CASE("multiplicity") {
    MatchingTable star(star3());
    ThetaAnalyzer at_zero(star, ThetaSpec::zero());
    CHECK(at_zero.multiplicity() == 2);

    MatchingTable p5(path(5));
    ThetaAnalyzer at_sqrt3(p5, kSqrt3);
    CHECK(at_sqrt3.multiplicity() == 1);

    MatchingTable k2(Graph::from_edges(2, {{0, 1}}));
    ThetaAnalyzer at_one(k2, ThetaSpec::from_integer(1));
    CHECK(at_one.multiplicity() == 1);

    CHECK(at_zero.multiplicity(0) == 0);  // mu of the empty set is 1
    CHECK_THROWS_AS(at_zero.multiplicity(VertexMask{1} << 7), std::domain_error);
}

TEST_CASE("vertex classification") {
    MatchingTable star(star3());
    ThetaAnalyzer an(star, ThetaSpec::zero());
    VertexMask full = star.graph().full_mask();

    VertexClass center = an.classify_vertex(full, 0);
    CHECK(center.kind == VertexKind::Positive);
    CHECK(center.special);

    VertexClass leaf = an.classify_vertex(full, 1);
    CHECK(leaf.kind == VertexKind::Essential);
    CHECK_FALSE(leaf.special);

    MatchingTable p3(path(3));
    ThetaAnalyzer at_one(p3, ThetaSpec::from_integer(1));
    VertexClass mid = at_one.classify_vertex(p3.graph().full_mask(), 1);
    CHECK(mid.kind == VertexKind::Neutral);
    CHECK_FALSE(mid.special);

    CHECK_THROWS_AS(an.classify_vertex(mask_bit(1), 0), std::domain_error);
}

TEST_CASE("decompose named graphs") {
    MatchingTable star(star3());
    ThetaAnalyzer an(star, ThetaSpec::zero());
    Decomposition d = an.decompose();
    CHECK(d.mult == 2);
    CHECK(d.D == (mask_bit(1) | mask_bit(2) | mask_bit(3)));
    CHECK(d.A == mask_bit(0));
    CHECK(d.N == 0);
    CHECK(d.P == 0);
    CHECK(d.Q() == mask_bit(0));

    MatchingTable p5(path(5));
    ThetaAnalyzer sq(p5, kSqrt3);
    Decomposition d5 = sq.decompose();
    CHECK(d5.mult == 1);
    CHECK(d5.D == p5.graph().full_mask());
    CHECK(d5.A == 0);
    CHECK(d5.N == 0);
    CHECK(d5.P == 0);

    // mult 0: everything splits into N and P
    MatchingTable k2(Graph::from_edges(2, {{0, 1}}));
    ThetaAnalyzer at5(k2, ThetaSpec::from_integer(5));
    Decomposition dk = at5.decompose();
    CHECK(dk.mult == 0);
    CHECK(dk.D == 0);
    CHECK(dk.A == 0);
    CHECK(dk.N == k2.graph().full_mask());

    // P3 at 0: leaves essential, center special
    MatchingTable p3(path(3));
    ThetaAnalyzer z3(p3, ThetaSpec::zero());
    Decomposition dp = z3.decompose();
    CHECK(dp.mult == 1);
    CHECK(dp.D == (mask_bit(0) | mask_bit(2)));
    CHECK(dp.A == mask_bit(1));
    CHECK(dp.N == 0);
}

TEST_CASE("partition invariants on random graphs") {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 7, 0.4);
        MatchingTable t(g);
        for (const ThetaSpec& theta :
             {ThetaSpec::zero(), ThetaSpec(kSqrt3), ThetaSpec::from_integer(1)}) {
            ThetaAnalyzer an(t, theta);
            Decomposition d = an.decompose();
            VertexMask all = d.D | d.A | d.N | d.P;
            CHECK(all == g.full_mask());
            CHECK((d.D & d.A) == 0);
            CHECK((d.D & d.N) == 0);
            CHECK((d.D & d.P) == 0);
            CHECK((d.A & d.N) == 0);
            CHECK((d.A & d.P) == 0);
            CHECK((d.N & d.P) == 0);
            if (d.mult == 0) {
                CHECK(d.D == 0);
                CHECK(d.A == 0);
            }
            if (theta.is_zero()) CHECK(d.N == 0);
        }
    }
}

TEST_CASE("theta criticality") {
    MatchingTable k1(Graph::from_edges(1, {}));
    CHECK(ThetaAnalyzer(k1, ThetaSpec::zero()).is_theta_critical(mask_bit(0)));

    MatchingTable p5(path(5));
    CHECK(ThetaAnalyzer(p5, kSqrt3).is_theta_critical(p5.graph().full_mask()));

    MatchingTable k2(Graph::from_edges(2, {{0, 1}}));
    CHECK(ThetaAnalyzer(k2, ThetaSpec::from_integer(1)).is_theta_critical(k2.graph().full_mask()));

    MatchingTable p3(path(3));
    CHECK_FALSE(ThetaAnalyzer(p3, ThetaSpec::zero()).is_theta_critical(p3.graph().full_mask()));

    CHECK_THROWS_AS(ThetaAnalyzer(p3, ThetaSpec::zero()).is_theta_critical(0), std::domain_error);
}

TEST_CASE("critical component count") {
    MatchingTable star(star3());
    ThetaAnalyzer an(star, ThetaSpec::zero());
    CHECK(an.critical_component_count(mask_bit(0)) == 3);
    CHECK(an.critical_component_count(0) == 0);

    MatchingTable p3(path(3));
    ThetaAnalyzer at_one(p3, ThetaSpec::from_integer(1));
    CHECK(at_one.critical_component_count(mask_bit(0)) == 1);  // remaining K2 is 1-critical
}

TEST_CASE("multiplicity step is at most one") {
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 7, 0.5);
        MatchingTable t(g);
        IntPoly mu = t.mu();
        std::vector<ThetaSpec> thetas{ThetaSpec::zero(), ThetaSpec(kSqrt3)};
        if (!mu.is_zero()) {
            for (ThetaSpec& c : find_theta_candidates(mu, 2)) thetas.push_back(std::move(c));
        }
        for (const ThetaSpec& theta : thetas) {
            ThetaAnalyzer an(t, theta);
            for (VertexMask live = 0; live <= g.full_mask(); ++live) {
                int base = an.multiplicity(live);
                for (int u : mask_to_vertices(live)) {
                    int step = an.multiplicity(live & ~mask_bit(u)) - base;
                    CHECK(step >= -1);
                    CHECK(step <= 1);
                }
            }
        }
    }
}
