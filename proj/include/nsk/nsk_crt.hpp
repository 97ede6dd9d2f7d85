#ifndef NSK_NSK_CRT_HPP
#define NSK_NSK_CRT_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "nsk/polynomial.hpp"
#include "nsk/prime_field.hpp"
#include "nsk/scheme.hpp"

namespace nsk {

// Componentwise scheme over (F_q^{L+1})*: carrier i is the vector
// ((r_1 - alpha_i)^v, ..., (r_{L+1} - alpha_i)^v).
struct CrtPublicKey {
    PrimeField field;
    std::vector<std::uint64_t> eval_points;           // r_1..r_{L+1}, distinct
    std::vector<std::vector<std::uint64_t>> carriers; // L vectors, length L+1, nonzero entries

    std::size_t message_length() const { return carriers.size(); }
};

struct CrtSecretKey {
    PrimeField field;
    std::vector<std::uint64_t> eval_points;
    std::vector<std::uint64_t> alphas; // distinct, disjoint from eval_points
    std::uint64_t v, u;                // u*v == 1 mod q-1
};

// needs q >= 2L + 1 (L+1 evaluation points plus L distinct alphas)
std::pair<CrtPublicKey, CrtSecretKey> keygen_crt(std::uint64_t q, std::size_t L,
                                                 std::uint64_t seed);

std::vector<std::uint64_t> encrypt_crt(const CrtPublicKey& pk, const Message& m);
Message decrypt_crt(const CrtSecretKey& sk, const std::vector<std::uint64_t>& c);

// Unique polynomial of degree <= points-1 through (points[i], values[i]).
Polynomial lagrange_interpolate(PrimeField field, const std::vector<std::uint64_t>& points,
                                const std::vector<std::uint64_t>& values);

void write_crt_public_key(std::ostream& os, const CrtPublicKey& pk);
void write_crt_secret_key(std::ostream& os, const CrtSecretKey& sk);
void write_crt_ciphertext(std::ostream& os, const std::vector<std::uint64_t>& c);
CrtPublicKey read_crt_public_key(std::istream& is);
CrtSecretKey read_crt_secret_key(std::istream& is);
std::vector<std::uint64_t> read_crt_ciphertext(std::istream& is);

} // namespace nsk

#endif
