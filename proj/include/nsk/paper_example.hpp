#ifndef NSK_PAPER_EXAMPLE_HPP
#define NSK_PAPER_EXAMPLE_HPP

#include <string>
#include <vector>

#include "nsk/nsk_poly.hpp"

namespace nsk {

// The published 9-carrier F_2 example: two linear carriers, the quadratic,
// and all six quintics, h = 1 + x^2 + x^35, v = 3821.
struct PaperExample {
    std::uint64_t q = 2;
    // secret carriers in the publication's definition order p_1..p_9
    std::vector<Polynomial> secret_order_carriers;
    // index into secret_order_carriers for each published carrier row
    // (rows 5..7 of the published list are a cyclic permutation)
    std::vector<std::size_t> published_order;
    Polynomial h;
    BigUint v, u_published;
    std::string message = "111000111";
    Polynomial c_published;  // printed ciphertext
    Polynomial cu_published; // printed c^u
    std::vector<Polynomial> published_carrier_values; // printed p_i^v rows
    std::vector<Polynomial> printed_factor_list;      // printed Factor_2(c^u)

    static PaperExample load();

    // Secret/public key pair with carriers in the *published* row order,
    // v = 3821 and h as printed.
    std::pair<PolyPublicKey, PolySecretKey> build_key() const;
};

struct ReplayCheck {
    std::string name;
    bool ok;
    std::string detail;
};

// End-to-end replay; every check compares a recomputed value against the
// printed one and reports per-value match/mismatch.
std::vector<ReplayCheck> replay_paper_example();

} // namespace nsk

#endif
