#include "matchpoly/theta.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

namespace matchpoly {

namespace {

// Divisibility prefilter modulus. m | p over Z implies m | p in F_prime
// whenever lc(m) is a unit mod prime, so a nonzero modular remainder
// rules divisibility out without any bignum work.
constexpr std::uint64_t kFilterPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kFilterPrime);
}

std::uint64_t reduce(const mpz_class& v) {
    std::uint64_t r = mpz_fdiv_ui(v.get_mpz_t(), kFilterPrime);
    return r;
}

std::uint64_t reduce_sll(long long v) {
    long long m = v % static_cast<long long>(kFilterPrime);
    if (m < 0) m += static_cast<long long>(kFilterPrime);
    return static_cast<std::uint64_t>(m);
}

std::vector<std::uint64_t> digest_of(const IntPoly& p) {
    std::vector<std::uint64_t> d(p.coeffs().size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = reduce(p.coeffs()[i]);
    return d;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + kFilterPrime - b;
}

// Modular inverse by Fermat; prime modulus.
std::uint64_t invmod(std::uint64_t a) {
    std::uint64_t r = 1, e = kFilterPrime - 2;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

// True when the modular remainder of num by den vanishes, i.e. when
// divisibility over Z is still possible. den must have an invertible
// leading coefficient (digest nonempty, last entry nonzero).
bool maybe_divisible(std::vector<std::uint64_t> num, const std::vector<std::uint64_t>& den) {
    if (num.size() < den.size()) {
        for (std::uint64_t v : num)
            if (v) return false;
        return true;
    }
    const std::size_t d = den.size() - 1;
    std::uint64_t lead_inv = invmod(den.back());
    for (std::size_t k = num.size() - 1;; --k) {
        std::uint64_t q = mulmod(num[k], lead_inv);
        if (q != 0) {
            for (std::size_t i = 0; i <= d; ++i) {
                num[k - d + i] = submod(num[k - d + i], mulmod(q, den[i]));
            }
        }
        if (k == d) break;
    }
    for (std::size_t i = 0; i < d; ++i)
        if (num[i]) return false;
    return true;
}

std::uint64_t eval_mod(const std::vector<std::uint64_t>& digest, std::uint64_t at) {
    std::uint64_t acc = 0;
    for (std::size_t i = digest.size(); i-- > 0;) {
        acc = mulmod(acc, at);
        acc = (acc + digest[i]) % kFilterPrime;
    }
    return acc;
}

bool is_perfect_square(const mpz_class& v) {
    if (v < 0) return false;
    return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

// Positive divisors of |v|, or nullopt when enumeration would be
// unreasonably expensive. Only degree <= 3 verification depends on this,
// and those inputs have small coefficients in practice.
std::optional<std::vector<unsigned long>> small_divisors(const mpz_class& v) {
    mpz_class a = abs(v);
    if (!a.fits_ulong_p()) return std::nullopt;
    unsigned long n = a.get_ui();
    std::vector<unsigned long> out;
    constexpr unsigned long kStepCap = 10'000'000UL;
    for (unsigned long i = 1; i <= n / i; ++i) {
        if (i > kStepCap) return std::nullopt;
        if (n % i == 0) {
            out.push_back(i);
            if (i != n / i) out.push_back(n / i);
        }
    }
    return out;
}

// Complete for primitive polynomials: a rational root p/q has q | lc and
// p | constant term.
bool has_rational_root(const IntPoly& m, bool* verified) {
    *verified = true;
    if (m.coeff(0) == 0) return true;  // root 0
    auto ps = small_divisors(m.coeff(0));
    auto qs = small_divisors(m.leading());
    if (!ps || !qs) {
        *verified = false;
        return false;
    }
    for (unsigned long q : *qs) {
        for (unsigned long p : *ps) {
            for (int sign = 0; sign < 2; ++sign) {
                // m(p/q) * q^deg = sum a_i p^i q^(deg-i)
                mpz_class pp = sign ? -static_cast<long>(p) : static_cast<long>(p);
                mpz_class acc = 0;
                mpz_class ppow = 1;
                std::vector<mpz_class> qpow(static_cast<std::size_t>(m.degree()) + 1);
                qpow[0] = 1;
                for (int i = 1; i <= m.degree(); ++i) qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i - 1)] * static_cast<long>(q);
                for (int i = 0; i <= m.degree(); ++i) {
                    acc += m.coeff(i) * ppow * qpow[static_cast<std::size_t>(m.degree() - i)];
                    ppow *= pp;
                }
                if (acc == 0) return true;
            }
        }
    }
    return false;
}

}  // namespace

ThetaSpec::ThetaSpec(IntPoly minpoly, std::string label) : label_(std::move(label)) {
    if (minpoly.is_zero() || minpoly.degree() < 1)
        throw std::domain_error("theta minimal polynomial must have degree >= 1");
    minpoly_ = minpoly.primitive_part();
    if (minpoly_.leading() < 0) minpoly_ = -minpoly_;

    IntPoly g = poly_gcd(minpoly_, minpoly_.derivative());
    if (g.degree() > 0)
        throw std::domain_error("theta minimal polynomial is not square-free");

    if (minpoly_.degree() == 2) {
        mpz_class disc = minpoly_.coeff(1) * minpoly_.coeff(1) - 4 * minpoly_.coeff(2) * minpoly_.coeff(0);
        if (is_perfect_square(disc))
            throw std::domain_error("theta minimal polynomial of degree 2 is reducible over Q");
    } else if (minpoly_.degree() >= 3) {
        bool verified = false;
        if (has_rational_root(minpoly_, &verified))
            throw std::domain_error("theta minimal polynomial has a rational root, hence is reducible");
        if (!verified && minpoly_.degree() == 3)
            throw std::domain_error(
                "cannot verify irreducibility of a degree-3 minimal polynomial with coefficients this large");
    }

    if (label_.empty()) {
        if (minpoly_.degree() == 1) {
            // qx - p  ->  p/q
            mpz_class p = -minpoly_.coeff(0), q = minpoly_.coeff(1);
            label_ = q == 1 ? p.get_str() : p.get_str() + "/" + q.get_str();
        } else {
            label_ = minpoly_.pretty();
        }
    }

    std::vector<std::uint64_t> d = digest_of(minpoly_);
    if (!d.empty() && d.back() != 0) filter_digest_ = std::move(d);
}

ThetaSpec ThetaSpec::zero() { return ThetaSpec(IntPoly::x(), "0"); }

ThetaSpec ThetaSpec::from_integer(long value, std::string label) {
    IntPoly m = IntPoly::x() - IntPoly(value);
    return ThetaSpec(std::move(m), std::move(label));
}

ThetaSpec ThetaSpec::rational(const mpz_class& p, const mpz_class& q, std::string label) {
    if (q == 0) throw std::domain_error("theta rational: zero denominator");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    mpz_class pr = p / g, qr = q / g;
    if (qr < 0) {
        pr = -pr;
        qr = -qr;
    }
    IntPoly m = IntPoly::monomial(1, qr) - IntPoly(pr);
    return ThetaSpec(std::move(m), std::move(label));
}

ThetaSpec ThetaSpec::parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rational(mpz_class(text), 1, text);
        mpz_class p(text.substr(0, slash));
        mpz_class q(text.substr(slash + 1));
        return rational(p, q, text);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("bad rational theta '" + text + "'");
    }
}

bool ThetaSpec::is_zero() const {
    return minpoly_.degree() == 1 && minpoly_.coeff(0) == 0 && minpoly_.coeff(1) == 1;
}

int root_multiplicity(const IntPoly& p, const ThetaSpec& theta) {
    if (p.is_zero()) throw std::domain_error("root_multiplicity: zero polynomial");
    const auto& mdig = theta.filter_digest();
    int k = 0;
    IntPoly cur = p;
    while (cur.degree() >= theta.minpoly().degree()) {
        if (!mdig.empty() && !maybe_divisible(digest_of(cur), mdig)) break;
        auto q = exact_divide(cur, theta.minpoly());
        if (!q) break;
        cur = std::move(*q);
        ++k;
    }
    return k;
}

std::vector<ThetaSpec> find_theta_candidates(const IntPoly& p, int degree_cap) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("find_theta_candidates: polynomial must be monic and nonzero");
    if (degree_cap < 1 || degree_cap > 2)
        throw std::invalid_argument("find_theta_candidates: degree_cap must be 1 or 2");

    std::vector<ThetaSpec> out;
    const int n = p.degree();
    if (n == 0) return out;
    std::vector<std::uint64_t> pdig = digest_of(p);

    // Integer roots, |c| <= n, in the order 0, 1, -1, 2, -2, ...
    for (int mag = 0; mag <= n; ++mag) {
        for (int sign = 0; sign < (mag == 0 ? 1 : 2); ++sign) {
            long c = sign ? -mag : mag;
            if (eval_mod(pdig, reduce_sll(c)) != 0) continue;
            IntPoly lin = IntPoly::x() - IntPoly(c);
            if (exact_divide(p, lin)) {
                out.emplace_back(std::move(lin), std::to_string(c));
            }
        }
    }
    if (degree_cap < 2) return out;

    // Irreducible monic quadratics x^2 + bx + c.
    const long long bmax = 2LL * n, cmax = static_cast<long long>(n) * n;
    for (long long b = -bmax; b <= bmax; ++b) {
        for (long long c = -cmax; c <= cmax; ++c) {
            long long disc = b * b - 4 * c;
            if (disc >= 0) {
                long long r = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
                while (r * r > disc) --r;
                while ((r + 1) * (r + 1) <= disc) ++r;
                if (r * r == disc) continue;  // reducible over Q
            }
            std::vector<std::uint64_t> qd{reduce_sll(c), reduce_sll(b), 1};
            if (!maybe_divisible(pdig, qd)) continue;
            IntPoly quad(std::vector<mpz_class>{mpz_class(static_cast<long>(c)),
                                                mpz_class(static_cast<long>(b)), mpz_class(1)});
            if (exact_divide(p, quad)) {
                out.emplace_back(std::move(quad), std::string());
            }
        }
    }
    return out;
}

}  // namespace matchpoly
