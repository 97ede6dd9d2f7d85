#ifndef NSK_ANALYSIS_HPP
#define NSK_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nsk/bigint.hpp"

namespace nsk {

struct RateValue {
    BigUint carriers;   // L
    BigUint modulus;    // deg h (polynomial) or modulus bits (integer)
    double rate;        // L / (modulus * log2 q)
};

std::string render_percent(double rate); // one-decimal percentage, e.g. "12.8%"
std::string render_percent2(double rate); // two decimals, used for the small examples

// I(q,N): all irreducibles of degree <= N, deg h = sum n*D_n + 1.
RateValue rate_closed_form(std::uint64_t q, std::size_t N);

// Carrier degrees appended to the degree-<=N base so the degree sum reaches
// block_bits - 1 exactly: as many (N+1)-degree polynomials as fit, the last
// one absorbing the remainder. Empty when the base already fills the block.
std::vector<std::size_t> plan_block_fill(std::uint64_t q, std::size_t base_N,
                                         std::size_t block_bits);

struct RateReport {
    struct Row {
        std::size_t L;
        std::size_t modulus_bits; // block size == deg h after top-up
        std::size_t base_N;
        std::vector<std::size_t> fill_degrees;
        double rate;
        std::string percent;
    };
    std::vector<Row> rows;
};

// The block-matching procedure: largest N with sum n*D_n + 1 <= B, topped up.
RateReport matching_table(std::uint64_t q, const std::vector<std::size_t>& blocks);

// I(q,N) * N * log2(q); tends to 1 as N grows.
double asymptotic_ratio(std::uint64_t q, std::size_t N);

// Integer-scheme analogue: carriers are all primes below 2^M.
// Guard: 2^M <= 2^24.
RateValue nsk_int_rate(std::size_t M);

// Primes below bound, by sieve.
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

} // namespace nsk

#endif
