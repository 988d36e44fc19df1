#include <random>

#include "doctest.h"
#include "matchpoly/barrier.hpp"
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

std::vector<VertexMask> family_masks(const std::vector<BarrierReport>& family) {
    std::vector<VertexMask> out;
    for (const auto& r : family) out.push_back(r.set);
    return out;
}

}  // namespace

TEST_CASE("theta deficiency") {
    MatchingTable star(star3());
    BarrierLab lab(star, ThetaSpec::zero());
    DeficiencyResult d = lab.theta_deficiency();
    CHECK(d.value == 2);
    CHECK(d.witness == mask_bit(0));

    MatchingTable p3(path(3));
    BarrierLab at_one(p3, ThetaSpec::from_integer(1));
    DeficiencyResult d3 = at_one.theta_deficiency();
    CHECK(d3.value == 0);
    CHECK(d3.witness == 0);  // least mask among maximizers

    MatchingTable empty3(Graph::from_edges(3, {}));
    BarrierLab z(empty3, ThetaSpec::zero());
    DeficiencyResult de = z.theta_deficiency();
    CHECK(de.value == 3);
    CHECK(de.witness == 0);
}

TEST_CASE("barrier and extreme decisions") {
    MatchingTable star(star3());
    BarrierLab lab(star, ThetaSpec::zero());
    CHECK(lab.is_theta_barrier(mask_bit(0)));
    CHECK(lab.is_theta_extreme(mask_bit(0)));
    CHECK_FALSE(lab.is_theta_barrier(0));
    CHECK(lab.is_theta_extreme(0));  // the empty set is always extreme
    CHECK_FALSE(lab.is_theta_extreme(mask_bit(1)));

    MatchingTable p5(path(5));
    BarrierLab sq(p5, kSqrt3);
    CHECK(sq.is_theta_barrier(0));  // P5 itself is sqrt3-critical
}

TEST_CASE("classical and zero barrier decisions") {
    MatchingTable star(star3());
    BarrierLab lab(star, ThetaSpec::zero());
    CHECK(lab.is_classical_barrier(mask_bit(0)));
    CHECK(lab.is_zero_barrier(mask_bit(0)));

    MatchingTable k2(Graph::from_edges(2, {{0, 1}}));
    BarrierLab lk2(k2, ThetaSpec::zero());
    CHECK(lk2.is_classical_barrier(0));

    // P3: the empty set attains the Berge maximum but c_0 misses it
    MatchingTable p3(path(3));
    BarrierLab lp3(p3, ThetaSpec::zero());
    CHECK(lp3.is_classical_barrier(0));
    CHECK_FALSE(lp3.is_zero_barrier(0));
}

TEST_CASE("barrier family enumeration") {
    MatchingTable star(star3());
    BarrierLab lab(star, ThetaSpec::zero());
    auto safe = lab.enumerate_barrier_sets(BarrierLab::EnumMode::Safe);
    auto pruned = lab.enumerate_barrier_sets(BarrierLab::EnumMode::Pruned);
    CHECK(family_masks(safe) == family_masks(pruned));
    REQUIRE(!safe.empty());
    bool has_center = false;
    for (const auto& r : safe) {
        CHECK(mask_contains(r.set, 0));  // every 0-barrier contains the center
        has_center = has_center || r.set == mask_bit(0);
        CHECK(r.theta_barrier);
        CHECK(r.theta_extreme);
    }
    CHECK(has_center);

    // increasing cardinality then mask order
    for (std::size_t i = 1; i < safe.size(); ++i) {
        bool ordered = safe[i - 1].size < safe[i].size ||
                       (safe[i - 1].size == safe[i].size && safe[i - 1].set < safe[i].set);
        CHECK(ordered);
    }

    MatchingTable p5(path(5));
    BarrierLab sq(p5, kSqrt3);
    auto fam5 = sq.enumerate_barrier_sets();
    REQUIRE(fam5.size() == 1);
    CHECK(fam5[0].set == 0);

    MatchingTable k1(Graph::from_edges(1, {}));
    BarrierLab lk1(k1, ThetaSpec::zero());
    auto fam1 = lk1.enumerate_barrier_sets();
    REQUIRE(fam1.size() == 1);
    CHECK(fam1[0].set == 0);
}

TEST_CASE("extreme family enumeration") {
    MatchingTable star(star3());
    BarrierLab lab(star, ThetaSpec::zero());
    auto ext = lab.enumerate_extreme_sets();
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == 0);
    CHECK(ext[1] == mask_bit(0));

    MatchingTable p5(path(5));
    BarrierLab sq(p5, kSqrt3);
    auto e5 = sq.enumerate_extreme_sets();
    REQUIRE(e5.size() == 1);
    CHECK(e5[0] == 0);
}

TEST_CASE("maximal barrier sets") {
    MatchingTable p3(path(3));
    BarrierLab at_one(p3, ThetaSpec::from_integer(1));
    auto maximal = at_one.maximal_barrier_sets();
    REQUIRE(maximal.size() == 2);
    CHECK(maximal[0] == mask_bit(0));
    CHECK(maximal[1] == mask_bit(2));

    MatchingTable k1(Graph::from_edges(1, {}));
    auto m1 = BarrierLab(k1, ThetaSpec::zero()).maximal_barrier_sets();
    REQUIRE(m1.size() == 1);
    CHECK(m1[0] == 0);

    // pairwise intersections of maximal barriers stay barriers
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 6, 0.45);
        MatchingTable t(g);
        BarrierLab lab(t, ThetaSpec::zero());
        auto mx = lab.maximal_barrier_sets();
        for (std::size_t i = 0; i < mx.size(); ++i)
            for (std::size_t j = i + 1; j < mx.size(); ++j)
                CHECK(lab.is_theta_barrier(mx[i] & mx[j]));
    }
}

TEST_CASE("extend extreme set to a barrier") {
    MatchingTable star(star3());
    BarrierLab lab(star, ThetaSpec::zero());
    CHECK(lab.extend_extreme_to_barrier(0) == mask_bit(0));
    CHECK(lab.extend_extreme_to_barrier(mask_bit(0)) == mask_bit(0));
    CHECK_THROWS_AS(lab.extend_extreme_to_barrier(mask_bit(1)), std::domain_error);

    MatchingTable p5(path(5));
    BarrierLab sq(p5, kSqrt3);
    CHECK(sq.extend_extreme_to_barrier(0) == 0);

    // every enumerated extreme set completes to a containing barrier
    std::mt19937_64 rng(8128);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(rng, 6, 0.4);
        MatchingTable t(g);
        BarrierLab l(t, ThetaSpec::zero());
        for (VertexMask x : l.enumerate_extreme_sets()) {
            VertexMask completion = l.extend_extreme_to_barrier(x);
            CHECK(l.is_theta_barrier(completion));
            CHECK((completion & x) == x);
        }
    }
}

TEST_CASE("intersection of maximal barriers") {
    MatchingTable star(star3());
    MaximalIntersection mi = BarrierLab(star, ThetaSpec::zero()).intersect_maximal_barriers();
    CHECK(mi.intersection == mask_bit(0));
    CHECK(mi.n_theta_empty);
    CHECK(mi.equals_a_theta);

    MatchingTable p5(path(5));
    MaximalIntersection m5 = BarrierLab(p5, kSqrt3).intersect_maximal_barriers();
    CHECK(m5.intersection == 0);
    CHECK(m5.equals_a_theta);
}

TEST_CASE("barrier implies extreme on random graphs") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 6, 0.5);
        MatchingTable t(g);
        for (const ThetaSpec& theta : {ThetaSpec::zero(), ThetaSpec(kSqrt3)}) {
            BarrierLab lab(t, theta);
            for (VertexMask x = 0; x <= g.full_mask(); ++x) {
                if (lab.is_theta_barrier(x)) CHECK(lab.is_theta_extreme(x));
            }
        }
    }
}

TEST_CASE("scan cap refusal and override") {
    Graph big = Graph::from_edges(23, {});
    MatchingTable t(big, MatchingTable::Policy::Lazy);
    BarrierLab guarded(t, ThetaSpec::zero());
    CHECK_THROWS_AS(guarded.theta_deficiency(), CapExceeded);
    CHECK_THROWS_AS(guarded.enumerate_barrier_sets(), CapExceeded);
    // decisions on single sets stay available
    CHECK(guarded.is_theta_barrier(0));

    BarrierLab forced(t, ThetaSpec::zero(), true);
    // on the edgeless graph every vertex is essential, so the pruned
    // universe collapses to the empty set
    auto fam = forced.enumerate_barrier_sets(BarrierLab::EnumMode::Pruned);
    REQUIRE(fam.size() == 1);
    CHECK(fam[0].set == 0);
}
