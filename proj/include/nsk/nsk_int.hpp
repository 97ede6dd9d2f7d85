#ifndef NSK_NSK_INT_HPP
#define NSK_NSK_INT_HPP

#include <iosfwd>
#include <vector>

#include "nsk/bigint.hpp"
#include "nsk/scheme.hpp"

namespace nsk {

struct IntPublicKey {
    BigUint p; // prime modulus, prod p_i < p
    std::vector<BigUint> carriers; // p_i^v mod p

    std::size_t message_length() const { return carriers.size(); }
};

struct IntSecretKey {
    BigUint p;
    std::vector<BigUint> primes; // distinct primes
    BigUint v, u;                // u*v == 1 mod p-1
};

// Carriers are the first L primes; p = next_prime(prod + margin).
// margin 0 reproduces the maximal-rate regime (and its smoothness leak).
std::pair<IntPublicKey, IntSecretKey> keygen_int(std::size_t L, const BigUint& margin,
                                                 std::uint64_t seed);
// Same, with an explicit prime list.
std::pair<IntPublicKey, IntSecretKey> keygen_int_with_primes(std::vector<BigUint> primes,
                                                             const BigUint& margin,
                                                             std::uint64_t seed);

BigUint encrypt_int(const IntPublicKey& pk, const Message& m);
Message decrypt_int(const IntSecretKey& sk, const BigUint& c);

void write_int_public_key(std::ostream& os, const IntPublicKey& pk);
void write_int_secret_key(std::ostream& os, const IntSecretKey& sk);
void write_int_ciphertext(std::ostream& os, const BigUint& c);
IntPublicKey read_int_public_key(std::istream& is);
IntSecretKey read_int_secret_key(std::istream& is);
BigUint read_int_ciphertext(std::istream& is);

} // namespace nsk

#endif
