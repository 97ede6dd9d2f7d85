#ifndef NSK_NSK_POLY_HPP
#define NSK_NSK_POLY_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "nsk/bigint.hpp"
#include "nsk/polynomial.hpp"
#include "nsk/qring.hpp"
#include "nsk/scheme.hpp"

namespace nsk {

struct PolyPublicKey {
    std::shared_ptr<const QuotientRing> ring;
    std::vector<RingElement> carriers; // C_i = [p_i^v]
    std::optional<std::size_t> weight; // constant-weight restriction, if any

    std::size_t message_length() const { return carriers.size(); }
};

struct PolySecretKey {
    std::shared_ptr<const QuotientRing> ring;
    std::vector<Polynomial> carriers; // p_i, monic irreducible, distinct
    BigUint v, u;                     // u*v == 1 mod q^d - 1
    std::optional<std::size_t> weight;

    std::size_t message_length() const { return carriers.size(); }
};

struct KeygenStrategy {
    enum class Kind { MaxRate, Safe, ConstantWeight };

    Kind kind = Kind::MaxRate;
    std::size_t max_degree = 1;                       // N
    std::optional<std::size_t> target_block_bits;     // MaxRate top-up target
    std::size_t weight = 0;                           // ConstantWeight w
    std::size_t safe_degree_budget = 64;              // Safe: candidate degrees tried
    std::uint64_t seed = 0;

    // golden-test injection: fixed parameters instead of sampled ones
    std::optional<std::vector<Polynomial>> fixed_carriers;
    std::optional<Polynomial> fixed_h;
    std::optional<BigUint> fixed_v;

    static KeygenStrategy max_rate(std::size_t N, std::uint64_t seed = 0,
                                   std::optional<std::size_t> block = std::nullopt) {
        KeygenStrategy s;
        s.kind = Kind::MaxRate;
        s.max_degree = N;
        s.target_block_bits = block;
        s.seed = seed;
        return s;
    }
    static KeygenStrategy safe(std::size_t N, std::uint64_t seed = 0,
                               std::size_t budget = 64) {
        KeygenStrategy s;
        s.kind = Kind::Safe;
        s.max_degree = N;
        s.safe_degree_budget = budget;
        s.seed = seed;
        return s;
    }
    static KeygenStrategy constant_weight(std::size_t N, std::size_t w,
                                          std::uint64_t seed = 0) {
        KeygenStrategy s;
        s.kind = Kind::ConstantWeight;
        s.max_degree = N;
        s.weight = w;
        s.seed = seed;
        return s;
    }
};

std::pair<PolyPublicKey, PolySecretKey> keygen(std::uint64_t q, const KeygenStrategy& strategy);

RingElement encrypt(const PolyPublicKey& pk, const Message& m);
Message decrypt(const PolySecretKey& sk, const RingElement& c);

// Key and ciphertext files (UTF-8, LF); see the README for the exact layout.
void write_public_key(std::ostream& os, const PolyPublicKey& pk);
void write_secret_key(std::ostream& os, const PolySecretKey& sk);
void write_ciphertext(std::ostream& os, const RingElement& c);
PolyPublicKey read_public_key(std::istream& is);
PolySecretKey read_secret_key(std::istream& is);
RingElement read_ciphertext(std::istream& is, std::shared_ptr<const QuotientRing> ring);

// First k monic irreducibles of exactly the given degree, canonical order.
std::vector<Polynomial> first_irreducibles_of_degree(PrimeField field, std::size_t degree,
                                                     std::size_t k);

} // namespace nsk

#endif
