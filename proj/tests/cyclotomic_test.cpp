#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "hyperinc/cyclotomic.hpp"
#include "hyperinc/hypergraph.hpp"
#include "hyperinc/matrix.hpp"

using namespace hyperinc;

namespace {

using Complex = std::complex<double>;

Complex zeta(std::size_t r, long long j) {
    const double pi = std::acos(-1.0);
    return std::polar(1.0, 2.0 * pi * static_cast<double>(j) / static_cast<double>(r));
}

// Product of (x - ζ^j) over gcd(j, r) = 1, expanded numerically.
std::vector<long long> numeric_phi(std::size_t r) {
    std::vector<Complex> p{Complex(1)};
    for (std::size_t j = 1; j <= r; ++j) {
        if (std::gcd(j, r) != 1) continue;
        std::vector<Complex> next(p.size() + 1, Complex(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] -= p[i] * zeta(r, static_cast<long long>(j));
        }
        p = next;
    }
    std::vector<long long> out;
    for (const auto& c : p) out.push_back(std::llround(c.real()));
    return out;
}

Complex evaluate(const CyclotomicNumber& x) {
    Complex sum = 0;
    const auto& c = x.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
        sum += c[i].convert_to<double>() * zeta(x.order(), static_cast<long long>(i));
    return sum;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(2).coeffs == std::vector<BigInt>{1, 1});
    CHECK(cyclotomic_polynomial(4).coeffs == std::vector<BigInt>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6).coeffs == std::vector<BigInt>{1, -1, 1});
    for (std::size_t r = 1; r <= 40; ++r) {
        const auto phi = cyclotomic_polynomial(r);
        const auto expected = numeric_phi(r);
        REQUIRE(phi.coeffs.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(phi.coeffs[i] == expected[i]);
    }
    // first coefficient outside {-1, 0, 1}
    const auto p105 = cyclotomic_polynomial(105);
    CHECK(std::find(p105.coeffs.begin(), p105.coeffs.end(), BigInt(-2)) != p105.coeffs.end());
}

TEST_CASE("field arithmetic matches complex evaluation") {
    std::mt19937_64 rng(5);
    for (std::size_t r : {3u, 4u, 5u, 8u, 9u, 12u}) {
        for (int t = 0; t < 20; ++t) {
            auto random_element = [&] {
                CyclotomicNumber x = CyclotomicNumber::zero(r);
                for (int i = 0; i < 4; ++i)
                    x = x + CyclotomicNumber::zeta_power(r, static_cast<long long>(rng() % 30) - 15) *
                                Rational(static_cast<long long>(rng() % 7) - 3, 1 + static_cast<long long>(rng() % 4));
                return x;
            };
            const auto a = random_element();
            const auto b = random_element();
            CHECK(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)) < 1e-9);
            CHECK(std::abs(evaluate(a + b) - (evaluate(a) + evaluate(b))) < 1e-9);
            CHECK(std::abs(evaluate(a - b) - (evaluate(a) - evaluate(b))) < 1e-9);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == CyclotomicNumber::from_rational(r, 1));
            }
        }
    }
}

TEST_CASE("powers of zeta") {
    for (std::size_t r = 1; r <= 16; ++r) {
        CHECK(CyclotomicNumber::zeta_power(r, static_cast<long long>(r)) == CyclotomicNumber::from_rational(r, 1));
        CHECK(CyclotomicNumber::zeta_power(r, -1) * CyclotomicNumber::zeta_power(r, 1) ==
              CyclotomicNumber::from_rational(r, 1));
        for (std::size_t j = 1; j < r; ++j) {
            // 1 + ω + ... + ω^{r-1} = 0 for ω = ζ_r^j ≠ 1
            CyclotomicNumber sum = CyclotomicNumber::zero(r);
            for (std::size_t s = 0; s < r; ++s)
                sum = sum + CyclotomicNumber::zeta_power(r, static_cast<long long>(j * s));
            CHECK(sum.is_zero());
            CHECK(CyclotomicNumber::zeta_power(r, static_cast<long long>(j)) != CyclotomicNumber::from_rational(r, 1));
        }
    }
    CHECK(CyclotomicNumber::zeta_power(6, 1).to_string() == "z");
    CHECK(CyclotomicNumber::zeta_power(6, 2).to_string() == "-1 + z");
    CHECK_THROWS_AS(CyclotomicNumber::zeta_power(3, 1) + CyclotomicNumber::zeta_power(4, 1), Error);
    CHECK_THROWS_AS(CyclotomicNumber::zero(5).inverse(), Error);
}

TEST_CASE("root-of-unity vectors") {
    const auto y = root_of_unity_vector(6, 2, 1);
    for (int i = 0; i < 6; ++i)
        CHECK(y[std::to_string(i)] == CyclotomicNumber::from_rational(2, i % 2 == 0 ? 1 : -1));
    const auto ones = root_of_unity_vector(5, 5, 5);
    for (int i = 0; i < 5; ++i) CHECK(ones[std::to_string(i)] == CyclotomicNumber::from_rational(5, 1));

    CHECK(matvec(edge_vertex_incidence(uniform_cycle(6, 4)), y).is_zero());
    const auto x = root_of_unity_vector(8, 4, 1);
    CHECK(matvec(edge_vertex_incidence(uniform_cycle(8, 4)), x).is_zero());
    // ω = 1 gives the all-ones vector, which is never in the kernel
    CHECK_FALSE(matvec(edge_vertex_incidence(uniform_cycle(8, 4)), root_of_unity_vector(8, 4, 4)).is_zero());
    CHECK_THROWS_AS(root_of_unity_vector(6, 1, 1), Error);
    CHECK_THROWS_AS(root_of_unity_vector(6, 3, 4), Error);
}
