#ifndef NSK_BIGINT_HPP
#define NSK_BIGINT_HPP

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "nsk/errors.hpp"

namespace nsk {

// Unbounded nonnegative integer. Thin value wrapper around GMP's mpz so the
// rest of the toolkit never touches mpz_t directly.
class BigUint {
public:
    BigUint() : v_(0) {}
    BigUint(unsigned long n) : v_(n) {}
    explicit BigUint(const mpz_class& z) : v_(z) {
        if (v_ < 0) throw Underflow("BigUint from negative value");
    }

    static BigUint from_decimal(const std::string& s);
    std::string to_decimal() const { return v_.get_str(); }

    const mpz_class& mpz() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool fits_u64() const;
    std::uint64_t to_u64() const;
    std::size_t bit_length() const { return v_ == 0 ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }
    bool bit(std::size_t i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }

    friend BigUint operator+(const BigUint& a, const BigUint& b) { return BigUint(mpz_class(a.v_ + b.v_)); }
    friend BigUint operator*(const BigUint& a, const BigUint& b) { return BigUint(mpz_class(a.v_ * b.v_)); }
    friend BigUint operator-(const BigUint& a, const BigUint& b) {
        if (a.v_ < b.v_) throw Underflow("BigUint subtraction underflow");
        return BigUint(mpz_class(a.v_ - b.v_));
    }
    friend BigUint operator%(const BigUint& a, const BigUint& m) {
        if (m.v_ == 0) throw ZeroModulus();
        return BigUint(mpz_class(a.v_ % m.v_));
    }
    friend BigUint operator/(const BigUint& a, const BigUint& b) {
        if (b.v_ == 0) throw ZeroModulus("division by zero");
        return BigUint(mpz_class(a.v_ / b.v_));
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.v_ >= b.v_; }

private:
    mpz_class v_;
};

// (quotient, remainder) with a = q*b + r, 0 <= r < b
std::pair<BigUint, BigUint> divrem(const BigUint& a, const BigUint& b);

BigUint pow_u64(const BigUint& base, std::uint64_t exp);

// base^exp mod modulus; modulus must be >= 2
BigUint mod_pow(const BigUint& base, const BigUint& exp, const BigUint& modulus);

// multiplicative inverse of a mod m; throws NotInvertible when gcd(a,m) != 1
BigUint mod_inv(const BigUint& a, const BigUint& m);

BigUint gcd(const BigUint& a, const BigUint& b);

// Miller-Rabin. Deterministic witness set for 64-bit inputs, `rounds` random
// rounds above that. false is always certain.
bool is_probable_prime(const BigUint& n, int rounds = 40);

// Smallest probable prime strictly greater than n.
BigUint next_prime(const BigUint& n);

} // namespace nsk

#endif
