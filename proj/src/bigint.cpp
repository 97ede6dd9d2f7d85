#include "nsk/bigint.hpp"

#include <array>
#include <random>

namespace nsk {

BigUint BigUint::from_decimal(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    for (char c : s)
        if (c < '0' || c > '9') throw ParseError("bad integer literal: " + s);
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw ParseError("bad integer literal: " + s);
    return BigUint(z);
}

bool BigUint::fits_u64() const {
    return bit_length() <= 64;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw Error("BigUint does not fit in 64 bits");
    std::uint64_t lo = mpz_get_ui(mpz_class(v_ & 0xffffffff).get_mpz_t());
    std::uint64_t hi = mpz_get_ui(mpz_class((v_ >> 32) & 0xffffffff).get_mpz_t());
    return (hi << 32) | lo;
}

std::pair<BigUint, BigUint> divrem(const BigUint& a, const BigUint& b) {
    if (b.is_zero()) throw ZeroModulus("divrem by zero");
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return {BigUint(q), BigUint(r)};
}

BigUint pow_u64(const BigUint& base, std::uint64_t exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exp);
    return BigUint(r);
}

BigUint mod_pow(const BigUint& base, const BigUint& exp, const BigUint& modulus) {
    if (modulus < BigUint(2)) throw ZeroModulus("mod_pow modulus must be >= 2");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.mpz().get_mpz_t(), exp.mpz().get_mpz_t(),
             modulus.mpz().get_mpz_t());
    return BigUint(r);
}

BigUint mod_inv(const BigUint& a, const BigUint& m) {
    if (m < BigUint(2)) throw ZeroModulus("mod_inv modulus must be >= 2");
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.mpz().get_mpz_t(), m.mpz().get_mpz_t()) == 0)
        throw NotInvertible("gcd(a, m) != 1");
    return BigUint(r);
}

BigUint gcd(const BigUint& a, const BigUint& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return BigUint(r);
}

namespace {

// One Miller-Rabin round for witness a; n odd, n - 1 = d * 2^s.
bool mr_round(const mpz_class& n, const mpz_class& d, unsigned long s, const mpz_class& a) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_probable_prime(const BigUint& nb, int rounds) {
    const mpz_class& n = nb.mpz();
    if (n < 2) return false;
    static const int small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                       31, 37, 41, 43, 47, 53, 59, 61, 67};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }

    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    if (nb.bit_length() <= 64) {
        // Deterministic for n < 3.3*10^24 (covers all 64-bit inputs).
        static const unsigned long witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        for (unsigned long a : witnesses)
            if (!mr_round(n, d, s, mpz_class(a))) return false;
        return true;
    }

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ mpz_get_ui(n.get_mpz_t()));
    for (int i = 0; i < rounds; ++i) {
        mpz_class a;
        mpz_class span = n - 3;
        // rejection-free: random value in [2, n-2]
        mpz_class raw;
        do {
            raw = 0;
            for (std::size_t w = 0; w * 64 < nb.bit_length() + 64; ++w)
                raw = (raw << 64) + mpz_class(rng() >> 1) * 2 + mpz_class((unsigned long)(rng() & 1));
        } while (raw < 0);
        a = 2 + raw % span;
        if (!mr_round(n, d, s, a)) return false;
    }
    return true;
}

BigUint next_prime(const BigUint& n) {
    mpz_class c = n.mpz() + 1;
    if (c <= 2) return BigUint(2);
    if (c % 2 == 0) ++c;
    while (!is_probable_prime(BigUint(c))) c += 2;
    return BigUint(c);
}

} // namespace nsk
