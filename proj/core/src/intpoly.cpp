#include "matchpoly/intpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace matchpoly {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(long constant) {
    if (constant != 0) c_.emplace_back(constant);
}

IntPoly::IntPoly(mpz_class constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<mpz_class> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    normalize();
}

IntPoly IntPoly::monomial(int k, mpz_class coeff) {
    IntPoly p;
    if (coeff == 0) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, kZero);
    p.c_.back() = std::move(coeff);
    return p;
}

IntPoly IntPoly::from_desc(std::vector<mpz_class> descending_coeffs) {
    std::vector<mpz_class> asc(descending_coeffs.rbegin(), descending_coeffs.rend());
    return IntPoly(std::move(asc));
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), kZero);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), kZero);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    IntPoly r;
    r.c_.assign(lhs.c_.size() + rhs.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            if (rhs.c_[j] == 0) continue;
            r.c_[i + j] += lhs.c_[i] * rhs.c_[j];
        }
    }
    r.normalize();
    return r;
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
    if (k == 0) return {};
    IntPoly r(*this);
    for (auto& v : r.c_) v *= k;
    return r;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<std::size_t>(k)] = c_[i];
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    IntPoly r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
    r.normalize();
    return r;
}

mpz_class IntPoly::eval(const mpz_class& at) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    IntPoly r(*this);
    if (g != 1) {
        for (auto& v : r.c_) v /= g;
    }
    return r;
}

std::string IntPoly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (it != c_.rbegin()) out << ' ';
        out << it->get_str();
    }
    return out.str();
}

IntPoly IntPoly::parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<mpz_class> desc;
    std::string tok;
    while (in >> tok) {
        try {
            desc.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad polynomial coefficient '" + tok + "'");
        }
    }
    if (desc.empty()) throw std::invalid_argument("empty polynomial text");
    return from_desc(std::move(desc));
}

std::string IntPoly::pretty(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& a = coeff(k);
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0) out << '-';
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) out << mag.get_str();
        if (k > 0) {
            out << var;
            if (k > 1) out << '^' << k;
        }
        first = false;
    }
    return out.str();
}

std::optional<IntPoly> exact_divide(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (num.is_zero()) return IntPoly{};
    if (num.degree() < den.degree()) return std::nullopt;

    // Long division, kept in Z: an integral quotient exists iff every
    // step's leading division is exact and the final remainder vanishes.
    std::vector<mpz_class> rem(num.coeffs());
    const auto& d = den.coeffs();
    const mpz_class& dl = den.leading();
    int qdeg = num.degree() - den.degree();
    std::vector<mpz_class> q(static_cast<std::size_t>(qdeg) + 1);

    for (int k = qdeg; k >= 0; --k) {
        mpz_class& top = rem[static_cast<std::size_t>(k + den.degree())];
        if (top == 0) {
            q[static_cast<std::size_t>(k)] = 0;
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), dl.get_mpz_t())) return std::nullopt;
        mpz_class qk = top / dl;
        for (std::size_t i = 0; i < d.size(); ++i) {
            rem[static_cast<std::size_t>(k) + i] -= qk * d[i];
        }
        q[static_cast<std::size_t>(k)] = std::move(qk);
    }
    for (const auto& v : rem) {
        if (v != 0) return std::nullopt;
    }
    return IntPoly(std::move(q));
}

namespace {

// Pseudo-remainder: some lc(b)-power multiple of a reduced mod b, exact in Z.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const mpz_class bl = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int k = a.degree() - b.degree();
        mpz_class al = a.leading();
        a = a.scaled(bl) - b.scaled(al).shifted(k);
    }
    return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: both arguments zero");
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.is_zero()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    if (u.leading() < 0) u = -u;
    return u;
}

}  // namespace matchpoly
