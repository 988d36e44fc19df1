#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchpoly/intpoly.hpp"

namespace matchpoly {

/// An algebraic number theta, identified by its minimal polynomial up to
/// conjugacy (conjugate roots share multiplicities in any integer
/// polynomial, so no isolating interval is kept). The minimal polynomial is
/// normalized to primitive with positive leading coefficient and is
/// machine-checked to be square-free. Irreducibility over Q is fully
/// verified for degrees 1-3 (rational-root test, plus the non-square
/// discriminant test at degree 2); for higher degrees it is the caller's
/// assertion, with only a rational-root rejection run as a sanity screen.
class ThetaSpec {
public:
    explicit ThetaSpec(IntPoly minpoly, std::string label = "");

    static ThetaSpec zero();
    static ThetaSpec from_integer(long value, std::string label = "");
    /// theta = p/q via minimal polynomial qx - p. Note a non-integer
    /// rational always has multiplicity 0 in a monic integer polynomial.
    static ThetaSpec rational(const mpz_class& p, const mpz_class& q, std::string label = "");
    /// Parses "3", "-2" or "5/4".
    static ThetaSpec parse_rational(const std::string& text);

    const IntPoly& minpoly() const { return minpoly_; }
    const std::string& label() const { return label_; }
    int degree() const { return minpoly_.degree(); }
    bool is_zero() const;
    bool same_theta(const ThetaSpec& other) const { return minpoly_ == other.minpoly_; }

    /// Minimal polynomial reduced mod the filter prime, ascending degree.
    /// Empty when the leading coefficient vanishes mod the prime.
    const std::vector<std::uint64_t>& filter_digest() const { return filter_digest_; }

private:
    IntPoly minpoly_;
    std::string label_;
    std::vector<std::uint64_t> filter_digest_;
};

/// Largest k such that minpoly(theta)^k divides p; equals the multiplicity
/// of the real root theta since the minimal polynomial is irreducible.
/// Throws std::domain_error for the zero polynomial.
int root_multiplicity(const IntPoly& p, const ThetaSpec& theta);

/// All roots of a monic polynomial p with a minimal polynomial of degree
/// <= degree_cap (1 or 2): integer roots x - c with |c| <= deg p, and for
/// degree_cap = 2 every irreducible monic quadratic factor x^2 + bx + c
/// with |b| <= 2 deg p, |c| <= (deg p)^2, found by trial exact division.
/// The coefficient bounds assume all roots of p lie in [-deg p, deg p],
/// which holds for matching polynomials.
std::vector<ThetaSpec> find_theta_candidates(const IntPoly& p, int degree_cap);

}  // namespace matchpoly
