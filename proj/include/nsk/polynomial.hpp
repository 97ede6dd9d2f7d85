#ifndef NSK_POLYNOMIAL_HPP
#define NSK_POLYNOMIAL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nsk/bigint.hpp"
#include "nsk/prime_field.hpp"

namespace nsk {

// Dense univariate polynomial over F_q, canonical form (no trailing zeros).
// coeffs[i] is the coefficient of x^i; the zero polynomial has no coefficients.
class Polynomial {
public:
    explicit Polynomial(PrimeField field) : field_(field) {}
    Polynomial(PrimeField field, std::vector<std::uint64_t> coeffs);

    static Polynomial zero(PrimeField f) { return Polynomial(f); }
    static Polynomial one(PrimeField f) { return Polynomial(f, {1}); }
    static Polynomial x(PrimeField f) { return Polynomial(f, {0, 1}); }
    static Polynomial constant(PrimeField f, std::uint64_t c) { return Polynomial(f, {c}); }
    // x^n with unit coefficient
    static Polynomial monomial(PrimeField f, std::size_t n);

    const PrimeField& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return (long)coeffs_.size() - 1; }
    std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint64_t leading_coeff() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return leading_coeff() == 1; }

    Polynomial monic() const;
    std::uint64_t eval(std::uint64_t at) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Comma-separated decimal coefficients, constant term first.
    std::string to_text() const;
    static Polynomial from_text(PrimeField field, const std::string& text);
    // Human-readable "1 + x^2 + x^35" rendering used in reports.
    std::string pretty() const;

private:
    void normalize();

    PrimeField field_;
    std::vector<std::uint64_t> coeffs_;
};

// (quotient, remainder), deg(remainder) < deg(b); throws DivisionByZeroPoly
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

// monic gcd
Polynomial poly_gcd(Polynomial a, Polynomial b);

// base^exp mod modulus over F_q
Polynomial poly_powmod(const Polynomial& base, const BigUint& exp, const Polynomial& modulus);

// Rabin irreducibility test; throws ConstantPolynomial for deg < 1
bool is_irreducible(const Polynomial& f);

// Random monic irreducible of degree exactly d, deterministic per seed.
Polynomial random_irreducible(PrimeField field, std::size_t d, std::uint64_t seed);
Polynomial random_irreducible(PrimeField field, std::size_t d, std::mt19937_64& rng);

// All monic irreducibles of degree 1..max_degree, ordered by degree then by the
// base-q integer with the constant term as least-significant digit.
// Guard: q^max_degree <= 2^24.
std::vector<Polynomial> enumerate_irreducibles(PrimeField field, std::size_t max_degree);

// D_n^q = (1/n) sum_{k|n} mu(n/k) q^k
BigUint count_irreducibles(std::uint64_t q, std::size_t n);

int mobius(std::uint64_t n);

// Distinct-degree + Cantor-Zassenhaus factorization. Factors are monic,
// ordered (degree, then coefficient order); multiplies back to f exactly
// together with the leading coefficient.
std::vector<std::pair<Polynomial, unsigned>> factor(const Polynomial& f,
                                                    std::uint64_t seed = 0x5eed);

} // namespace nsk

#endif
