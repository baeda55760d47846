#include "hyperinc/cyclotomic.hpp"

#include <stdexcept>

#include "hyperinc/error.hpp"

namespace hyperinc {

namespace {

using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<Rational>;

// Exact division by a monic divisor; throws if a remainder is left.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("cyclotomic division: divisor too large");
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const BigInt c = num[i];
        if (c == 0) continue;
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder over Q; divisor must be non-zero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
    trim(num);
    if (num.size() < den.size()) return {RatPoly{}, num};
    RatPoly quot(num.size() - den.size() + 1, Rational(0));
    const Rational lead = den.back();
    for (std::size_t i = num.size(); i-- >= den.size();) {
        const Rational c = num[i] / lead;
        if (c == 0) continue;
        const std::size_t shift = i - (den.size() - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    trim(num);
    return {quot, num};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

CyclotomicPoly cyclotomic_polynomial(std::size_t r) {
    if (r == 0) throw Error(ErrorCode::InvalidParameters, "cyclotomic order must be positive");
    IntPoly poly(r + 1, 0);
    poly[0] = -1;
    poly[r] = 1;
    for (std::size_t d = 1; d < r; ++d) {
        if (r % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d).coeffs);
    }
    return CyclotomicPoly{r, std::move(poly)};
}

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(zero(1)) {}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicPoly> modulus, std::vector<Rational> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {}

CyclotomicNumber CyclotomicNumber::zero(std::size_t order) {
    auto modulus = std::make_shared<const CyclotomicPoly>(cyclotomic_polynomial(order));
    const std::size_t deg = modulus->degree();
    return CyclotomicNumber(std::move(modulus), std::vector<Rational>(deg, Rational(0)));
}

CyclotomicNumber CyclotomicNumber::from_rational(std::size_t order, const Rational& q) {
    CyclotomicNumber out = zero(order);
    out.coeffs_[0] = q;
    return out;
}

CyclotomicNumber CyclotomicNumber::zeta_power(std::size_t order, long long exponent) {
    CyclotomicNumber out = zero(order);
    const long long r = static_cast<long long>(order);
    const auto e = static_cast<std::size_t>(((exponent % r) + r) % r);
    std::vector<Rational> poly(e + 1, Rational(0));
    poly[e] = 1;
    out.reduce(poly);
    out.coeffs_ = std::move(poly);
    return out;
}

void CyclotomicNumber::reduce(std::vector<Rational>& poly) const {
    const auto& phi = modulus_->coeffs;
    const std::size_t deg = modulus_->degree();
    for (std::size_t i = poly.size(); i-- > deg;) {
        const Rational c = poly[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg, Rational(0));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

namespace {

void require_same_field(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order() != b.order())
        throw Error(ErrorCode::InvalidParameters, "mixing Q(ζ_" + std::to_string(a.order()) + ") and Q(ζ_" +
                                                      std::to_string(b.order()) + ")");
}

}  // namespace

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return CyclotomicNumber(modulus_, std::move(c));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    require_same_field(a, b);
    std::vector<Rational> c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return CyclotomicNumber(a.modulus_, std::move(c));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    require_same_field(a, b);
    std::vector<Rational> prod = poly_mul(a.coeffs_, b.coeffs_);
    a.reduce(prod);
    return CyclotomicNumber(a.modulus_, std::move(prod));
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const Rational& q) {
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c) x *= q;
    return CyclotomicNumber(a.modulus_, std::move(c));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw Error(ErrorCode::InvalidParameters, "zero has no inverse");
    // Track s with s*a ≡ remainder (mod Φ); Φ is irreducible so the last
    // non-zero remainder is a constant.
    RatPoly phi;
    for (const auto& c : modulus_->coeffs) phi.emplace_back(c);
    RatPoly r0 = phi;
    RatPoly r1 = coeffs_;
    trim(r1);
    RatPoly s0;
    RatPoly s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, rem] = divmod(r0, r1);
        RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    const Rational constant = r1.at(0);
    for (auto& c : s1) c /= constant;
    reduce(s1);
    return CyclotomicNumber(modulus_, std::move(s1));
}

std::string CyclotomicNumber::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string power = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        if (power.empty()) {
            out += hyperinc::to_string(mag);
        } else if (mag == 1) {
            out += power;
        } else {
            out += hyperinc::to_string(mag) + "*" + power;
        }
    }
    return out.empty() ? "0" : out;
}

CyclotomicVector root_of_unity_vector(std::size_t n, std::size_t r, std::size_t power) {
    if (r < 2) throw Error(ErrorCode::InvalidParameters, "root-of-unity vectors need r >= 2");
    if (power < 1 || power > r) throw Error(ErrorCode::InvalidParameters, "power must lie in 1..r");
    CyclotomicVector x(CyclotomicNumber::zero(r));
    for (std::size_t i = 0; i < n; ++i) {
        x.set(std::to_string(i), CyclotomicNumber::zeta_power(r, static_cast<long long>(power * i)));
    }
    return x;
}

}  // namespace hyperinc
