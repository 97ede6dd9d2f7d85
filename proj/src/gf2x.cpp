#include "nsk/gf2x.hpp"

#include <array>

#include "nsk/errors.hpp"

namespace nsk::gf2x {

long Packed::degree() const {
    if (words.empty()) return -1;
    std::uint64_t top = words.back();
    int hi = 63;
    while (!((top >> hi) & 1)) --hi;
    return (long)(words.size() - 1) * 64 + hi;
}

void Packed::trim() {
    while (!words.empty() && words.back() == 0) words.pop_back();
}

Packed pack(const Polynomial& p) {
    if (p.field().q() != 2) throw FieldMismatch("gf2x::pack needs F_2");
    Packed out;
    out.words.assign(p.coeffs().size() / 64 + 1, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i]) out.words[i / 64] |= 1ull << (i % 64);
    out.trim();
    return out;
}

Polynomial unpack(PrimeField field, const Packed& p) {
    long d = p.degree();
    if (d < 0) return Polynomial::zero(field);
    std::vector<std::uint64_t> c((std::size_t)d + 1, 0);
    for (long i = 0; i <= d; ++i)
        if (p.bit((std::size_t)i)) c[(std::size_t)i] = 1;
    return Polynomial(field, std::move(c));
}

Packed from_degree_bits(const std::vector<std::size_t>& exponents) {
    Packed out;
    for (std::size_t e : exponents) {
        if (e / 64 >= out.words.size()) out.words.resize(e / 64 + 1, 0);
        out.words[e / 64] ^= 1ull << (e % 64);
    }
    out.trim();
    return out;
}

Packed add(const Packed& a, const Packed& b) {
    Packed out = a.words.size() >= b.words.size() ? a : b;
    const Packed& small = a.words.size() >= b.words.size() ? b : a;
    for (std::size_t i = 0; i < small.words.size(); ++i) out.words[i] ^= small.words[i];
    out.trim();
    return out;
}

namespace {

// xor (src << shift) into dst
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 std::size_t shift) {
    std::size_t ws = shift / 64, bs = shift % 64;
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
    } else {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i + ws] ^= (src[i] << bs) | carry;
            carry = src[i] >> (64 - bs);
        }
        if (carry) dst[src.size() + ws] ^= carry;
    }
}

// spread the low 32 bits of w into even bit positions (squaring map)
std::uint64_t spread_bits(std::uint32_t w) {
    std::uint64_t x = w;
    x = (x | (x << 16)) & 0x0000ffff0000ffffull;
    x = (x | (x << 8)) & 0x00ff00ff00ff00ffull;
    x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

Packed square(const Packed& a) {
    Packed out;
    out.words.assign(a.words.size() * 2, 0);
    for (std::size_t i = 0; i < a.words.size(); ++i) {
        out.words[2 * i] = spread_bits((std::uint32_t)a.words[i]);
        out.words[2 * i + 1] = spread_bits((std::uint32_t)(a.words[i] >> 32));
    }
    out.trim();
    return out;
}

} // namespace

Packed mul(const Packed& a, const Packed& b) {
    if (a.is_zero() || b.is_zero()) return Packed{};
    Packed out;
    out.words.assign(a.words.size() + b.words.size(), 0);
    const Packed& lo = a.words.size() <= b.words.size() ? a : b;
    const Packed& hi = a.words.size() <= b.words.size() ? b : a;
    for (std::size_t w = 0; w < lo.words.size(); ++w) {
        std::uint64_t bits = lo.words[w];
        while (bits) {
            int tz = __builtin_ctzll(bits);
            bits &= bits - 1;
            xor_shifted(out.words, hi.words, w * 64 + (std::size_t)tz);
        }
    }
    out.trim();
    return out;
}

Packed mod(Packed a, const Packed& m) {
    if (m.is_zero()) throw DivisionByZeroPoly();
    long dm = m.degree();
    long da = a.degree();
    while (da >= dm) {
        xor_shifted(a.words, m.words, (std::size_t)(da - dm));
        a.trim();
        da = a.degree();
    }
    return a;
}

Packed mulmod(const Packed& a, const Packed& b, const Packed& m) {
    return mod(mul(a, b), m);
}

Packed sqrmod(const Packed& a, const Packed& m) {
    return mod(square(a), m);
}

Packed powmod(const Packed& base, const BigUint& exp, const Packed& m) {
    Packed result = from_degree_bits({0});
    result = mod(result, m);
    Packed b = mod(base, m);
    std::size_t nbits = exp.bit_length();
    for (std::size_t i = nbits; i-- > 0;) {
        result = sqrmod(result, m);
        if (exp.bit(i)) result = mulmod(result, b, m);
    }
    return result;
}

Packed gcd(Packed a, Packed b) {
    while (!b.is_zero()) {
        Packed r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool is_irreducible(const Packed& f) {
    long n = f.degree();
    if (n < 1) throw ConstantPolynomial();
    if (n == 1) return true;
    if (!f.bit(0)) return false; // divisible by x
    const Packed x = from_degree_bits({1});
    // Rabin: x^(2^(n/p)) - x coprime to f for prime p | n, and x^(2^n) == x
    std::uint64_t rest = (std::uint64_t)n;
    std::vector<std::uint64_t> prime_divs;
    for (std::uint64_t p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            prime_divs.push_back(p);
            while (rest % p == 0) rest /= p;
        }
    if (rest > 1) prime_divs.push_back(rest);

    // incremental squaring chain: t_k = x^(2^k) mod f
    Packed t = mod(x, f);
    long k = 0;
    for (std::uint64_t p : prime_divs) {
        long target = n / (long)p;
        if (target < k) { // restart (prime divisors ascending => targets descending)
            t = mod(x, f);
            k = 0;
        }
        while (k < target) {
            t = sqrmod(t, f);
            ++k;
        }
        if (gcd(add(t, x), f).degree() != 0) return false;
    }
    while (k < n) {
        t = sqrmod(t, f);
        ++k;
    }
    return add(t, mod(x, f)).is_zero();
}

} // namespace nsk::gf2x
