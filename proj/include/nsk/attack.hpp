#ifndef NSK_ATTACK_HPP
#define NSK_ATTACK_HPP

#include <optional>
#include <vector>

#include "nsk/bigint.hpp"
#include "nsk/nsk_poly.hpp"
#include "nsk/qring.hpp"

namespace nsk {

struct GroupOrderFactorization {
    BigUint order;
    std::vector<std::pair<BigUint, unsigned>> prime_factors;
    bool complete = false;
};

// Trial division up to 10^6, then Pollard rho with an iteration cap;
// incomplete results leave the unfactored cofactor out and clear `complete`.
GroupOrderFactorization factorize(const BigUint& n, std::uint64_t rho_iteration_cap = 1u << 22);

// Exact multiplicative order of y; requires a complete order factorization.
BigUint element_order(const RingElement& y, const GroupOrderFactorization& fact);

enum class BitVerdict : std::uint8_t { Zero = 0, One = 1, Unknown = 2 };

// The subgroup attack: bit j is recovered as (c^{M_j} != 1) whenever the
// order of carrier j is coprime to the product of all the other orders;
// otherwise the bit is reported unknown.
std::vector<BitVerdict> subgroup_attack(const std::vector<RingElement>& carriers_pub,
                                        const RingElement& c,
                                        const GroupOrderFactorization& fact);

struct AuditReport {
    BigUint r_value;                    // (q^d - 1)/(q - 1)
    bool r_prime = false;
    std::vector<bool> carrier_check;    // C_i^r != 1 per carrier
    // extended mode (q > 2): C_i^((q^d-1)/s) != 1 for each prime s | q-1
    std::optional<std::vector<bool>> generator_check;
    bool safe = false;                  // r_prime and every carrier check passes
};

AuditReport audit_safe(const PolyPublicKey& pk, bool extended = false);

struct LeakResult {
    std::uint64_t t; // p - t fully factored over small primes
    std::vector<std::pair<BigUint, unsigned>> factors;
};

// Smoothness probe: try to factor p - t for t = 1..t_max by trial division
// up to smooth_bound. Success recovers the bare carriers of a maximal-rate
// integer key.
std::optional<LeakResult> leak_probe(const BigUint& p, std::uint64_t t_max,
                                     const BigUint& smooth_bound);

} // namespace nsk

#endif
