#ifndef NSK_GF2X_HPP
#define NSK_GF2X_HPP

#include <cstdint>
#include <vector>

#include "nsk/bigint.hpp"
#include "nsk/polynomial.hpp"

namespace nsk::gf2x {

// Bit-packed F_2[x] kernels. Word i holds coefficients of x^(64i) .. x^(64i+63),
// constant term in bit 0 of word 0. The generic Polynomial path stays as the
// reference implementation; tests check the two against each other.
struct Packed {
    std::vector<std::uint64_t> words; // trailing zero words trimmed

    bool is_zero() const { return words.empty(); }
    long degree() const;
    bool bit(std::size_t i) const {
        std::size_t w = i / 64;
        return w < words.size() && (words[w] >> (i % 64)) & 1;
    }
    void trim();

    friend bool operator==(const Packed& a, const Packed& b) { return a.words == b.words; }
};

Packed pack(const Polynomial& p);
Polynomial unpack(PrimeField field, const Packed& p);
Packed from_degree_bits(const std::vector<std::size_t>& exponents);

Packed add(const Packed& a, const Packed& b); // == subtract in char 2
Packed mul(const Packed& a, const Packed& b);
Packed mod(Packed a, const Packed& m);
Packed mulmod(const Packed& a, const Packed& b, const Packed& m);
Packed sqrmod(const Packed& a, const Packed& m);
Packed powmod(const Packed& base, const BigUint& exp, const Packed& m);
Packed gcd(Packed a, Packed b);

bool is_irreducible(const Packed& f);

} // namespace nsk::gf2x

#endif
