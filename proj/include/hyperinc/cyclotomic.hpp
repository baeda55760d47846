#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hyperinc/labeled_vector.hpp"
#include "hyperinc/rational.hpp"

namespace hyperinc {

/// Φ_r over Z, coefficients from the constant term upwards. Monic of degree φ(r).
struct CyclotomicPoly {
    std::size_t order = 1;
    std::vector<BigInt> coeffs;

    std::size_t degree() const noexcept { return coeffs.size() - 1; }
};

/// Φ_r = (x^r - 1) / prod_{d | r, d < r} Φ_d, by exact division.
CyclotomicPoly cyclotomic_polynomial(std::size_t r);

/// An element of Q(ζ_r) stored as its residue modulo Φ_r: exactly φ(r)
/// rational coefficients of 1, ζ, ζ^2, ... Mixing orders throws InvalidParameters.
class CyclotomicNumber {
   public:
    /// Zero of Q(ζ_1) = Q.
    CyclotomicNumber();

    static CyclotomicNumber zero(std::size_t order);
    static CyclotomicNumber from_rational(std::size_t order, const Rational& q);
    /// ζ_r^j for any integer j.
    static CyclotomicNumber zeta_power(std::size_t order, long long exponent);

    std::size_t order() const noexcept { return modulus_->order; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const;

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
    /// Throws InvalidParameters for zero.
    CyclotomicNumber inverse() const;

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const Rational& q);
    friend CyclotomicNumber operator*(const Rational& q, const CyclotomicNumber& a) { return a * q; }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    /// e.g. "1 - 1/2*z + z^3" with z = ζ_r; "0" for zero.
    std::string to_string() const;

   private:
    CyclotomicNumber(std::shared_ptr<const CyclotomicPoly> modulus, std::vector<Rational> coeffs);
    void reduce(std::vector<Rational>& poly) const;

    std::shared_ptr<const CyclotomicPoly> modulus_;
    std::vector<Rational> coeffs_;
};

using CyclotomicVector = LabeledVector<CyclotomicNumber>;

/// x_ω on Z_n with ω = ζ_r^power: entry at vertex "i" is ω^i.
/// Requires r >= 2 and 1 <= power <= r (InvalidParameters otherwise).
CyclotomicVector root_of_unity_vector(std::size_t n, std::size_t r, std::size_t power);

}  // namespace hyperinc
