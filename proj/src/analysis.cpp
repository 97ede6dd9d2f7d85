#include "nsk/analysis.hpp"

#include <cmath>
#include <sstream>

#include "nsk/errors.hpp"
#include "nsk/polynomial.hpp"

namespace nsk {

std::string render_percent(double rate) {
    double pct = rate * 100.0;
    double rounded = std::round(pct * 10.0) / 10.0;
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << rounded << "%";
    return os.str();
}

std::string render_percent2(double rate) {
    double pct = rate * 100.0;
    double rounded = std::round(pct * 100.0) / 100.0;
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << rounded << "%";
    return os.str();
}

namespace {

double big_ratio(const BigUint& num, const BigUint& den) {
    mpq_class r(num.mpz(), den.mpz());
    r.canonicalize();
    return r.get_d();
}

} // namespace

RateValue rate_closed_form(std::uint64_t q, std::size_t N) {
    if (N < 1) throw Error("rate_closed_form needs N >= 1");
    BigUint L(0), degsum(0);
    for (std::size_t n = 1; n <= N; ++n) {
        BigUint d = count_irreducibles(q, n);
        L = L + d;
        degsum = degsum + d * BigUint((unsigned long)n);
    }
    BigUint deg_h = degsum + BigUint(1);
    double rate = big_ratio(L, deg_h) / std::log2((double)q);
    return RateValue{L, deg_h, rate};
}

std::vector<std::size_t> plan_block_fill(std::uint64_t q, std::size_t base_N,
                                         std::size_t block_bits) {
    BigUint degsum(0);
    for (std::size_t n = 1; n <= base_N; ++n)
        degsum = degsum + count_irreducibles(q, n) * BigUint((unsigned long)n);
    BigUint target(block_bits >= 1 ? (unsigned long)(block_bits - 1) : 0ul);
    if (degsum > target) throw BlockInfeasible("block smaller than the degree-<=N base");
    std::size_t remainder = (std::size_t)(target - degsum).to_u64();
    if (remainder == 0) return {};

    const std::size_t t = base_N + 1;
    if (remainder < t)
        throw BlockInfeasible("cannot fill the gap with polynomials of degree > N");
    std::size_t k = remainder / t; // added carriers; the last one absorbs the remainder
    std::vector<std::size_t> degrees((k > 0 ? k - 1 : 0), t);
    degrees.push_back(remainder - (k - 1) * t);
    // enough distinct degree-t polynomials must exist for the k-1 equal picks
    if (BigUint((unsigned long)(k - 1)) > count_irreducibles(q, t))
        throw BlockInfeasible("not enough irreducibles of the fill degree");
    return degrees;
}

RateReport matching_table(std::uint64_t q, const std::vector<std::size_t>& blocks) {
    RateReport report;
    std::size_t prev = 0;
    for (std::size_t B : blocks) {
        if (B <= prev) throw Error("blocks must be strictly ascending");
        prev = B;

        // largest N with sum n*D_n + 1 <= B
        std::size_t N = 0;
        BigUint degsum(0), L(0);
        for (std::size_t n = 1;; ++n) {
            BigUint d = count_irreducibles(q, n);
            BigUint next = degsum + d * BigUint((unsigned long)n);
            if (next + BigUint(1) > BigUint((unsigned long)B)) break;
            degsum = next;
            L = L + d;
            N = n;
        }
        if (N == 0) throw BlockInfeasible("block too small for any carrier");

        auto fill = plan_block_fill(q, N, B);
        std::size_t total_L = (std::size_t)L.to_u64() + fill.size();
        double rate = (double)total_L / ((double)B * std::log2((double)q));
        report.rows.push_back(
            RateReport::Row{total_L, B, N, fill, rate, render_percent(rate)});
    }
    return report;
}

double asymptotic_ratio(std::uint64_t q, std::size_t N) {
    RateValue r = rate_closed_form(q, N);
    return r.rate * (double)N * std::log2((double)q);
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 3) return out;
    std::vector<bool> sieve(bound, true);
    for (std::uint64_t i = 2; i < bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j < bound; j += i) sieve[j] = false;
    }
    return out;
}

RateValue nsk_int_rate(std::size_t M) {
    if (M < 1 || M > 24) throw SieveTooLarge("carrier bit bound limited to 24");
    auto primes = primes_below((1ull << M) + 1); // carriers of up to M bits, inclusive
    BigUint product(1);
    for (auto p : primes) product = product * BigUint((unsigned long)p);

    // An exact next-prime search is only affordable while the product is
    // moderate; above that the bit length is unchanged by next_prime except
    // when no prime lies between the product and the next power of two.
    std::size_t modulus_bits;
    if (product.bit_length() <= 4096)
        modulus_bits = next_prime(product).bit_length();
    else
        modulus_bits = product.bit_length();

    double rate = (double)primes.size() / (double)modulus_bits;
    return RateValue{BigUint((unsigned long)primes.size()),
                     BigUint((unsigned long)modulus_bits), rate};
}

} // namespace nsk
