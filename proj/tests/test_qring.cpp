#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsk/errors.hpp"
#include "nsk/qring.hpp"

using namespace nsk;

static Polynomial from_exps(PrimeField f, std::vector<std::size_t> exps) {
    std::size_t m = 0;
    for (auto e : exps) m = std::max(m, e);
    std::vector<std::uint64_t> c(m + 1, 0);
    for (auto e : exps) c[e] = 1;
    return Polynomial(f, std::move(c));
}

static std::shared_ptr<const QuotientRing> ring35() {
    PrimeField F2(2);
    return std::make_shared<const QuotientRing>(from_exps(F2, {0, 2, 35}), true);
}

TEST_CASE("ring construction") {
    PrimeField F2(2);
    auto ring = ring35();
    CHECK(ring->degree() == 35);
    CHECK(ring->group_order() == pow_u64(BigUint(2), 35) - BigUint(1));
    CHECK(ring->irreducible_checked());
    CHECK_THROWS(QuotientRing(from_exps(F2, {0, 2}), true)); // (1+x)^2 reducible
}

TEST_CASE("multiplicative identity and defining relation") {
    PrimeField F2(2);
    auto ring = ring35();
    RingElement a = qr_reduce(ring, from_exps(F2, {0, 3, 7}));
    CHECK(qr_mul(a, qr_one(ring)) == a);
    // x^34 * x reduces through x^35 == 1 + x^2
    RingElement x34 = qr_reduce(ring, from_exps(F2, {34}));
    RingElement x = qr_reduce(ring, Polynomial::x(F2));
    CHECK(qr_mul(x34, x).lift() == from_exps(F2, {0, 2}));
}

TEST_CASE("lift and reduce are inverse") {
    PrimeField F2(2);
    auto ring = ring35();
    // reducing h + x gives x
    Polynomial hx = from_exps(F2, {0, 2, 35}) + Polynomial::x(F2);
    CHECK(qr_reduce(ring, hx).lift() == Polynomial::x(F2));
    CHECK(qr_one(ring).lift() == Polynomial::one(F2));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        std::vector<std::uint64_t> c(rng() % 35 + 1);
        for (auto& v : c) v = rng() & 1;
        Polynomial p(F2, c);
        CHECK(qr_reduce(ring, p).lift() == p); // already below deg h
    }
}

TEST_CASE("powering") {
    PrimeField F2(2);
    auto ring = ring35();
    RingElement a = qr_reduce(ring, from_exps(F2, {1, 5, 9}));
    CHECK(qr_pow(a, BigUint(0)).is_one());
    RingElement x = qr_reduce(ring, Polynomial::x(F2));
    CHECK(qr_pow(x, ring->group_order()).is_one()); // Lagrange
    // small-exponent cross-check against repeated multiplication
    RingElement acc = qr_one(ring);
    for (int e = 0; e <= 20; ++e) {
        CHECK(qr_pow(a, BigUint((unsigned long)e)) == acc);
        acc = qr_mul(acc, a);
    }
}

TEST_CASE("shuffle exponent and its inverse cancel") {
    std::mt19937_64 rng(2);
    for (std::uint64_t q : {2ull, 3ull, 5ull}) {
        PrimeField F(q);
        auto ring =
            std::make_shared<const QuotientRing>(random_irreducible(F, 6, rng), true);
        const BigUint& order = ring->group_order();
        BigUint v(0);
        do {
            v = BigUint((unsigned long)(rng() % 1000 + 2));
        } while (gcd(v, order) != BigUint(1));
        BigUint u = mod_inv(v, order);
        for (int i = 0; i < 20; ++i) {
            std::vector<std::uint64_t> c(6);
            for (auto& w : c) w = rng() % q;
            Polynomial p(F, c);
            if (p.is_zero()) continue;
            RingElement a = qr_reduce(ring, p);
            CHECK(qr_pow(qr_pow(a, v), u) == a);
        }
    }
}

TEST_CASE("mismatched rings are rejected") {
    PrimeField F2(2);
    auto r1 = ring35();
    auto r2 = std::make_shared<const QuotientRing>(random_irreducible(F2, 5, 1), true);
    RingElement a = qr_reduce(r1, Polynomial::x(F2));
    RingElement b = qr_reduce(r2, Polynomial::x(F2));
    CHECK_THROWS_AS(qr_mul(a, b), RingMismatch);
}
