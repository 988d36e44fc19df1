#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matchpoly {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Normalized: the coefficient vector is empty exactly for
/// the zero polynomial, otherwise its last entry (the leading coefficient)
/// is nonzero. degree() of the zero polynomial is kZeroPolyDegree, the
/// integer stand-in for -infinity.
class IntPoly {
public:
    static constexpr int kZeroPolyDegree = -1;

    IntPoly() = default;
    IntPoly(long constant);  // NOLINT(google-explicit-constructor)
    explicit IntPoly(mpz_class constant);
    explicit IntPoly(std::vector<mpz_class> ascending_coeffs);

    /// x^k, scaled.
    static IntPoly monomial(int k, mpz_class coeff = 1);
    static IntPoly x() { return monomial(1); }

    /// Coefficients in descending degree, e.g. {1, 0, -3} for x^2 - 3.
    static IntPoly from_desc(std::vector<mpz_class> descending_coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of x^k; zero beyond the degree.
    const mpz_class& coeff(int k) const;
    const mpz_class& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs) { return *this = *this * rhs; }
    IntPoly scaled(const mpz_class& k) const;
    /// Multiply by x^k.
    IntPoly shifted(int k) const;

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& at) const;

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;
    /// Divided by the content; sign of the leading coefficient kept.
    IntPoly primitive_part() const;

    bool operator==(const IntPoly&) const = default;

    /// Space-separated coefficients in descending degree: "1 0 -3".
    std::string to_text() const;
    static IntPoly parse_text(std::string_view text);
    /// Human form: "x^2 - 3".
    std::string pretty(std::string_view var = "x") const;

    const std::vector<mpz_class>& coeffs() const { return c_; }

private:
    void normalize();
    std::vector<mpz_class> c_;  // c_[k] is the coefficient of x^k
};

/// Exact quotient num/den, or nullopt when den does not divide num with an
/// integer-coefficient quotient. Throws std::domain_error when den is zero.
std::optional<IntPoly> exact_divide(const IntPoly& num, const IntPoly& den);

/// Primitive gcd with positive leading coefficient.
/// Throws std::domain_error when both arguments are zero.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

}  // namespace matchpoly
