#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsk/gf2x.hpp"

using namespace nsk;

static Polynomial random_poly(std::size_t max_deg, std::mt19937_64& rng) {
    std::vector<std::uint64_t> c(rng() % (max_deg + 1) + 1);
    for (auto& v : c) v = rng() & 1;
    return Polynomial(PrimeField(2), std::move(c));
}

TEST_CASE("pack/unpack round trip") {
    PrimeField F2(2);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_poly(200, rng);
        CHECK(gf2x::unpack(F2, gf2x::pack(p)) == p);
        CHECK(gf2x::pack(p).degree() == p.degree());
    }
    CHECK(gf2x::pack(Polynomial::zero(F2)).is_zero());
}

TEST_CASE("from_degree_bits") {
    PrimeField F2(2);
    gf2x::Packed h = gf2x::from_degree_bits({0, 2, 35});
    CHECK(h.degree() == 35);
    CHECK(h.bit(0));
    CHECK(h.bit(2));
    CHECK(!h.bit(1));
    CHECK(gf2x::unpack(F2, h) == Polynomial::from_text(F2, [] {
              std::string s = "1,0,1";
              for (int i = 0; i < 32; ++i) s += ",0";
              s += ",1";
              return s;
          }()));
}

TEST_CASE("packed arithmetic agrees with the generic path") {
    PrimeField F2(2);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = random_poly(150, rng), b = random_poly(150, rng);
        CHECK(gf2x::unpack(F2, gf2x::add(gf2x::pack(a), gf2x::pack(b))) == a + b);
        CHECK(gf2x::unpack(F2, gf2x::mul(gf2x::pack(a), gf2x::pack(b))) == a * b);
        if (!b.is_zero())
            CHECK(gf2x::unpack(F2, gf2x::mod(gf2x::pack(a), gf2x::pack(b))) == a % b);
        CHECK(gf2x::unpack(F2, gf2x::gcd(gf2x::pack(a), gf2x::pack(b))) ==
              poly_gcd(a, b));
    }
}

TEST_CASE("mulmod, sqrmod, powmod") {
    PrimeField F2(2);
    std::mt19937_64 rng(3);
    gf2x::Packed m = gf2x::from_degree_bits({0, 2, 35});
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_poly(34, rng), b = random_poly(34, rng);
        gf2x::Packed pa = gf2x::pack(a), pb = gf2x::pack(b);
        CHECK(gf2x::unpack(F2, gf2x::mulmod(pa, pb, m)) ==
              (a * b) % gf2x::unpack(F2, m));
        CHECK(gf2x::sqrmod(pa, m) == gf2x::mulmod(pa, pa, m));
        std::uint64_t e = rng() % 128;
        Polynomial expected = Polynomial::one(F2);
        for (std::uint64_t k = 0; k < e; ++k)
            expected = (expected * a) % gf2x::unpack(F2, m);
        CHECK(gf2x::unpack(F2, gf2x::powmod(pa, BigUint(e), m)) == expected);
    }
}

TEST_CASE("irreducibility agrees with the generic test") {
    PrimeField F2(2);
    std::mt19937_64 rng(4);
    int seen_irreducible = 0;
    for (int i = 0; i < 300; ++i) {
        Polynomial f = random_poly(24, rng);
        if (f.degree() < 1) continue;
        bool packed = gf2x::is_irreducible(gf2x::pack(f));
        CHECK(packed == is_irreducible(f));
        seen_irreducible += packed;
    }
    CHECK(seen_irreducible > 0);
    CHECK(gf2x::is_irreducible(gf2x::from_degree_bits({0, 2, 35})));
    CHECK(!gf2x::is_irreducible(gf2x::from_degree_bits({0, 2}))); // (1+x)^2
}
