#include <random>

#include "doctest.h"
#include "matchpoly/intpoly.hpp"

using namespace matchpoly;

namespace {

IntPoly poly(std::vector<long> desc) {
    std::vector<mpz_class> c;
    for (long v : desc) c.emplace_back(v);
    return IntPoly::from_desc(std::move(c));
}

IntPoly random_poly(std::mt19937_64& rng, int max_deg, long coeff_range) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-coeff_range, coeff_range);
    std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("degree and normalization") {
    CHECK(IntPoly{}.is_zero());
    CHECK(IntPoly{}.degree() == IntPoly::kZeroPolyDegree);
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({1, 0, -3}).degree() == 2);
    CHECK(IntPoly(7).degree() == 0);
    CHECK(IntPoly::x().degree() == 1);
    CHECK(IntPoly::monomial(4).coeff(4) == 1);
    CHECK(poly({1, 0, -3}).coeff(5) == 0);
}

TEST_CASE("ring arithmetic") {
    // x^2 - 1 + 1 = x^2
    CHECK(poly({1, 0, -1}) + IntPoly(1) == poly({1, 0, 0}));
    CHECK(IntPoly::x() * IntPoly::x() == poly({1, 0, 0}));
    CHECK(poly({1, 0, -3}) * IntPoly::x() == poly({1, 0, -3, 0}));
    CHECK(poly({1, 2}) - poly({1, 2}) == IntPoly{});
    CHECK((-poly({1, -2})) == poly({-1, 2}));
    CHECK(poly({1, 1}).scaled(3) == poly({3, 3}));
    CHECK(poly({1, 1}).shifted(2) == poly({1, 1, 0, 0}));
}

TEST_CASE("derivative and evaluation") {
    CHECK(poly({1, 0, -3}).derivative() == poly({2, 0}));
    CHECK(poly({1, 0, -2, 0}).derivative() == poly({3, 0, -2}));
    CHECK(poly({1, 0, -3}).eval(2) == 1);
    CHECK(poly({1, 0, -3}).eval(-2) == 1);
    CHECK(IntPoly{}.eval(5) == 0);
}

TEST_CASE("content and primitive part") {
    CHECK(poly({2, 0, -6}).content() == 2);
    CHECK(poly({2, 0, -6}).primitive_part() == poly({1, 0, -3}));
    CHECK(poly({-2, 4}).primitive_part() == poly({-1, 2}));
    CHECK(IntPoly{}.content() == 0);
}

TEST_CASE("exact division examples") {
    // (x^5 - 4x^3 + 3x) / (x^2 - 3) = x^3 - x
    auto q = exact_divide(poly({1, 0, -4, 0, 3, 0}), poly({1, 0, -3}));
    REQUIRE(q.has_value());
    CHECK(*q == poly({1, 0, -1, 0}));
    CHECK(*q * poly({1, 0, -3}) == poly({1, 0, -4, 0, 3, 0}));

    CHECK_FALSE(exact_divide(poly({1, 0, -1, 0}), poly({1, 0, -3})).has_value());

    IntPoly p = poly({3, -1, 2});
    CHECK(exact_divide(p, IntPoly(1)) == p);

    // non-integral quotient is indivisible
    CHECK_FALSE(exact_divide(poly({1, 0, 0}), poly({2, 0})).has_value());
    CHECK(exact_divide(poly({2, 0, 0}), poly({2, 0})) == poly({1, 0}));

    CHECK(exact_divide(IntPoly{}, poly({1, 1})) == IntPoly{});
    CHECK_THROWS_AS(exact_divide(poly({1}), IntPoly{}), std::domain_error);
}

TEST_CASE("exact division round-trip property") {
    std::mt19937_64 rng(12345);
    int done = 0;
    while (done < 200) {
        IntPoly a = random_poly(rng, 6, 8);
        IntPoly b = random_poly(rng, 4, 8);
        if (b.is_zero()) continue;
        auto q = exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
        ++done;
    }
}

TEST_CASE("polynomial gcd") {
    CHECK(poly_gcd(poly({1, 0, -1}), poly({1, -1})) == poly({1, -1}));
    CHECK(poly_gcd(poly({1, 0, -3}), poly({2, 0})) == IntPoly(1));
    CHECK(poly_gcd(poly({4, 0, -8}), IntPoly{}) == poly({1, 0, -2}));
    CHECK(poly_gcd(IntPoly{}, poly({-3, 6})) == poly({1, -2}));
    CHECK_THROWS_AS(poly_gcd(IntPoly{}, IntPoly{}), std::domain_error);

    // gcd divides both and is monic-normalized to positive lead
    std::mt19937_64 rng(777);
    for (int i = 0; i < 100; ++i) {
        IntPoly g = random_poly(rng, 3, 4);
        if (g.is_zero()) continue;
        IntPoly a = g * random_poly(rng, 3, 4);
        IntPoly b = g * random_poly(rng, 3, 4);
        if (a.is_zero() && b.is_zero()) continue;
        IntPoly d = poly_gcd(a, b);
        CHECK(d.leading() > 0);
        if (!a.is_zero()) CHECK(exact_divide(a.primitive_part(), d).has_value());
        if (!b.is_zero()) CHECK(exact_divide(b.primitive_part(), d).has_value());
        // the common factor's primitive part divides the gcd
        CHECK(exact_divide(d, g.primitive_part().leading() > 0
                                  ? g.primitive_part()
                                  : -g.primitive_part())
                  .has_value());
    }
}

TEST_CASE("text form round trip") {
    CHECK(poly({1, 0, -3}).to_text() == "1 0 -3");
    CHECK(IntPoly{}.to_text() == "0");
    CHECK(IntPoly::parse_text("1 0 -3") == poly({1, 0, -3}));
    CHECK(IntPoly::parse_text("0") == IntPoly{});
    CHECK(IntPoly::parse_text("  5   -1 ") == poly({5, -1}));
    CHECK_THROWS_AS(IntPoly::parse_text("1 x 2"), std::invalid_argument);
    CHECK_THROWS_AS(IntPoly::parse_text(""), std::invalid_argument);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        IntPoly p = random_poly(rng, 8, 1000);
        CHECK(IntPoly::parse_text(p.to_text()) == p);
    }
}

TEST_CASE("pretty printing") {
    CHECK(poly({1, 0, -3}).pretty() == "x^2 - 3");
    CHECK(poly({1, 0, -4, 0, 3, 0}).pretty() == "x^5 - 4x^3 + 3x");
    CHECK(poly({-1, 2}).pretty() == "-x + 2");
    CHECK(IntPoly(1).pretty() == "1");
    CHECK(IntPoly{}.pretty() == "0");
    CHECK(poly({1, -1}).pretty() == "x - 1");
}
