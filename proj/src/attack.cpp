#include "nsk/attack.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "nsk/errors.hpp"

namespace nsk {

namespace {

// Pollard rho (Brent variant); returns a nontrivial factor or 0 on cap.
BigUint pollard_rho(const mpz_class& n, std::uint64_t cap) {
    if (n % 2 == 0) return BigUint(2);
    std::mt19937_64 rng(0xda7a ^ (std::uint64_t)mpz_get_ui(n.get_mpz_t()));
    for (int attempt = 0; attempt < 16; ++attempt) {
        mpz_class c = (unsigned long)(rng() % 1024 + 1);
        mpz_class x = (unsigned long)(rng() % 1024 + 2), y = x, d = 1;
        std::uint64_t it = 0;
        while (d == 1 && it < cap) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            ++it;
        }
        if (d != 1 && d != n) return BigUint(d);
    }
    return BigUint(0);
}

void factor_into(const BigUint& n, std::map<std::string, std::pair<BigUint, unsigned>>& acc,
                 bool& complete, std::uint64_t cap) {
    if (n == BigUint(1)) return;
    if (is_probable_prime(n)) {
        auto& slot = acc[n.to_decimal()];
        if (slot.second == 0) slot.first = n;
        ++slot.second;
        return;
    }
    BigUint f = pollard_rho(n.mpz(), cap);
    if (f.is_zero() || f == n) {
        complete = false;
        return;
    }
    factor_into(f, acc, complete, cap);
    factor_into(n / f, acc, complete, cap);
}

} // namespace

GroupOrderFactorization factorize(const BigUint& n, std::uint64_t rho_iteration_cap) {
    GroupOrderFactorization out;
    out.order = n;
    out.complete = true;
    if (n == BigUint(0)) {
        out.complete = false;
        return out;
    }
    mpz_class rest = n.mpz();
    std::map<std::string, std::pair<BigUint, unsigned>> acc;
    for (std::uint64_t p = 2; p <= 1000000 && mpz_class(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (rest % (unsigned long)p == 0) {
            auto& slot = acc[std::to_string(p)];
            if (slot.second == 0) slot.first = BigUint((unsigned long)p);
            ++slot.second;
            rest /= (unsigned long)p;
        }
    }
    if (rest > 1) factor_into(BigUint(rest), acc, out.complete, rho_iteration_cap);
    for (auto& [_, pe] : acc) out.prime_factors.push_back(pe);
    std::sort(out.prime_factors.begin(), out.prime_factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (out.complete) {
        BigUint check(1);
        for (const auto& [p, e] : out.prime_factors)
            for (unsigned i = 0; i < e; ++i) check = check * p;
        if (check != n) out.complete = false;
    }
    return out;
}

BigUint element_order(const RingElement& y, const GroupOrderFactorization& fact) {
    if (!fact.complete) throw IncompleteFactorization();
    if (y.is_zero()) throw Error("zero is not in the unit group");
    // start from the full group order, strip each prime while y^(o/p) == 1
    BigUint order = fact.order;
    for (const auto& [p, e] : fact.prime_factors) {
        for (unsigned i = 0; i < e; ++i) {
            BigUint reduced = order / p;
            if ((order % p).is_zero() && qr_pow(y, reduced).is_one())
                order = reduced;
            else
                break;
        }
    }
    return order;
}

std::vector<BitVerdict> subgroup_attack(const std::vector<RingElement>& carriers_pub,
                                        const RingElement& c,
                                        const GroupOrderFactorization& fact) {
    if (!fact.complete) throw IncompleteFactorization();
    const std::size_t L = carriers_pub.size();
    std::vector<BigUint> orders;
    orders.reserve(L);
    for (const auto& carrier : carriers_pub) orders.push_back(element_order(carrier, fact));

    std::vector<BitVerdict> out(L, BitVerdict::Unknown);
    for (std::size_t j = 0; j < L; ++j) {
        BigUint others(1);
        for (std::size_t i = 0; i < L; ++i)
            if (i != j) others = others * orders[i];
        if (gcd(orders[j], others) != BigUint(1)) continue; // only partial information
        out[j] = qr_pow(c, others).is_one() ? BitVerdict::Zero : BitVerdict::One;
    }
    return out;
}

AuditReport audit_safe(const PolyPublicKey& pk, bool extended) {
    AuditReport report;
    const std::uint64_t q = pk.ring->field().q();
    const BigUint& order = pk.ring->group_order();
    report.r_value = order / BigUint(q - 1);
    report.r_prime = is_probable_prime(report.r_value);

    // For q = 2, r is the whole group order and C^r = 1 holds for every unit;
    // with r prime any nontrivial element generates, so the per-carrier
    // condition degenerates to C != 0, 1.
    const bool whole_group = report.r_value == order;
    report.carrier_check.reserve(pk.carriers.size());
    for (const auto& c : pk.carriers)
        report.carrier_check.push_back(
            !c.is_zero() && !c.is_one() &&
            (whole_group || !qr_pow(c, report.r_value).is_one()));

    if (extended && q > 2) {
        auto qm1 = factorize(BigUint(q - 1));
        std::vector<bool> gen;
        gen.reserve(pk.carriers.size());
        for (const auto& c : pk.carriers) {
            bool ok = !c.is_zero();
            for (const auto& [s, e] : qm1.prime_factors)
                if (ok && qr_pow(c, order / s).is_one()) ok = false;
            // full generator check also includes the r-part
            if (ok && qr_pow(c, report.r_value).is_one()) ok = false;
            gen.push_back(ok);
        }
        report.generator_check = std::move(gen);
    }

    report.safe = report.r_prime &&
                  std::all_of(report.carrier_check.begin(), report.carrier_check.end(),
                              [](bool b) { return b; });
    return report;
}

std::optional<LeakResult> leak_probe(const BigUint& p, std::uint64_t t_max,
                                     const BigUint& smooth_bound) {
    if (p < BigUint(3)) throw Error("leak_probe needs p >= 3");
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        if (BigUint((unsigned long)t) >= p) break;
        mpz_class rest = (p - BigUint((unsigned long)t)).mpz();
        std::vector<std::pair<BigUint, unsigned>> factors;
        for (mpz_class d = 2; d <= smooth_bound.mpz() && rest > 1; ++d) {
            unsigned e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            if (e) factors.emplace_back(BigUint(d), e);
        }
        if (rest == 1) return LeakResult{t, std::move(factors)};
    }
    return std::nullopt;
}

} // namespace nsk
