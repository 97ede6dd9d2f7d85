#ifndef NSK_PRIME_FIELD_HPP
#define NSK_PRIME_FIELD_HPP

#include <cstdint>

#include "nsk/bigint.hpp"
#include "nsk/errors.hpp"

namespace nsk {

// F_q for a machine-word prime q. Elements are uint64_t values in [0, q).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t q) : q_(q) {
        if (q >= (1ull << 62) || !is_probable_prime(BigUint(q)))
            throw Error("PrimeField modulus must be a prime < 2^62");
    }

    std::uint64_t q() const { return q_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + q_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return (std::uint64_t)((unsigned __int128)a * b % q_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= q_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % q_ == 0) throw NotInvertible("zero has no inverse in F_q");
        return pow(a, q_ - 2);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.q_ != b.q_; }

private:
    std::uint64_t q_;
};

} // namespace nsk

#endif
