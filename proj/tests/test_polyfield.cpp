#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsk/errors.hpp"
#include "nsk/polynomial.hpp"

using nsk::BigUint;
using nsk::Polynomial;
using nsk::PrimeField;

static Polynomial poly(PrimeField f, std::vector<std::uint64_t> c) {
    return Polynomial(f, std::move(c));
}

static Polynomial from_exps(PrimeField f, std::vector<std::size_t> exps) {
    std::size_t m = 0;
    for (auto e : exps) m = std::max(m, e);
    std::vector<std::uint64_t> c(m + 1, 0);
    for (auto e : exps) c[e] = 1;
    return Polynomial(f, std::move(c));
}

TEST_CASE("construction and canonical form") {
    PrimeField F2(2);
    CHECK(poly(F2, {1, 0, 0}).degree() == 0); // trailing zeros trimmed
    CHECK(Polynomial::zero(F2).degree() == -1);
    CHECK(Polynomial::x(F2).degree() == 1);
    CHECK(poly(F2, {1, 1}).is_monic());
    CHECK_THROWS(PrimeField(4)); // not prime
}

TEST_CASE("ring arithmetic over F_2") {
    PrimeField F2(2);
    Polynomial one_plus_x = poly(F2, {1, 1});
    CHECK(one_plus_x * one_plus_x == poly(F2, {1, 0, 1})); // characteristic-2 squaring
    CHECK(nsk::poly_gcd(poly(F2, {0, 1, 1}), Polynomial::x(F2)) == Polynomial::x(F2));
}

TEST_CASE("divrem identity over several fields") {
    std::mt19937_64 rng(3);
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        PrimeField F(q);
        for (int i = 0; i < 100; ++i) {
            std::vector<std::uint64_t> ac(rng() % 12 + 1), bc(rng() % 6 + 1);
            for (auto& v : ac) v = rng() % q;
            for (auto& v : bc) v = rng() % q;
            Polynomial a(F, ac), b(F, bc);
            if (b.is_zero()) continue;
            auto [quot, rem] = nsk::divrem(a, b);
            CHECK(b * quot + rem == a);
            CHECK(rem.degree() < b.degree());
        }
    }
    CHECK_THROWS_AS(nsk::divrem(Polynomial::x(PrimeField(2)), Polynomial::zero(PrimeField(2))),
                    nsk::DivisionByZeroPoly);
}

TEST_CASE("product of six known F_2 irreducibles") {
    PrimeField F2(2);
    std::vector<Polynomial> factors = {
        Polynomial::x(F2),
        poly(F2, {1, 1}),
        poly(F2, {1, 1, 1}),
        poly(F2, {1, 1, 1, 1, 0, 1}),
        poly(F2, {1, 1, 0, 1, 1, 1}),
        poly(F2, {1, 0, 1, 1, 1, 1}),
    };
    Polynomial prod = Polynomial::one(F2);
    for (const auto& f : factors) prod = prod * f;
    CHECK(prod == from_exps(F2, {1, 3, 4, 6, 11, 12, 14, 15, 16, 19}));
}

TEST_CASE("irreducibility") {
    PrimeField F2(2);
    CHECK(nsk::is_irreducible(poly(F2, {1, 1, 1})));
    CHECK(!nsk::is_irreducible(poly(F2, {1, 0, 1}))); // (1+x)^2
    Polynomial h = from_exps(F2, {0, 2, 35});
    CHECK(nsk::is_irreducible(h));
    CHECK_THROWS_AS(nsk::is_irreducible(Polynomial::one(F2)), nsk::ConstantPolynomial);
}

TEST_CASE("random_irreducible") {
    CHECK(nsk::random_irreducible(PrimeField(3), 1, 7).degree() == 1);
    // the unique monic irreducible quadratic over F_2
    CHECK(nsk::random_irreducible(PrimeField(2), 2, 9) ==
          poly(PrimeField(2), {1, 1, 1}));
    Polynomial f = nsk::random_irreducible(PrimeField(2), 35, 11);
    CHECK(f.degree() == 35);
    CHECK(f.is_monic());
    CHECK(nsk::is_irreducible(f));
    // deterministic per seed
    CHECK(f == nsk::random_irreducible(PrimeField(2), 35, 11));
}

TEST_CASE("enumeration order") {
    PrimeField F2(2);
    auto small = nsk::enumerate_irreducibles(F2, 2);
    REQUIRE(small.size() == 3);
    CHECK(small[0] == Polynomial::x(F2));
    CHECK(small[1] == poly(F2, {1, 1}));
    CHECK(small[2] == poly(F2, {1, 1, 1}));

    auto upto5 = nsk::enumerate_irreducibles(F2, 5);
    REQUIRE(upto5.size() == 14);
    // the six quintics in canonical order
    std::vector<Polynomial> quintics = {
        poly(F2, {1, 0, 1, 0, 0, 1}), poly(F2, {1, 0, 0, 1, 0, 1}),
        poly(F2, {1, 1, 1, 1, 0, 1}), poly(F2, {1, 1, 1, 0, 1, 1}),
        poly(F2, {1, 1, 0, 1, 1, 1}), poly(F2, {1, 0, 1, 1, 1, 1}),
    };
    for (std::size_t i = 0; i < 6; ++i) CHECK(upto5[8 + i] == quintics[i]);

    auto lin3 = nsk::enumerate_irreducibles(PrimeField(3), 1);
    REQUIRE(lin3.size() == 3);
    CHECK(lin3[0] == Polynomial::x(PrimeField(3)));
    CHECK(lin3[1] == poly(PrimeField(3), {1, 1}));
    CHECK(lin3[2] == poly(PrimeField(3), {2, 1}));

    CHECK_THROWS_AS(nsk::enumerate_irreducibles(PrimeField(2), 30), nsk::EnumerationTooLarge);
}

TEST_CASE("counting matches enumeration") {
    CHECK(nsk::count_irreducibles(2, 1) == BigUint(2));
    CHECK(nsk::count_irreducibles(3, 1) == BigUint(3));
    CHECK(nsk::count_irreducibles(7, 1) == BigUint(7));
    CHECK(nsk::count_irreducibles(2, 5) == BigUint(6));
    CHECK(nsk::count_irreducibles(2, 9) == BigUint(56));
    for (std::uint64_t q : {2ull, 3ull}) {
        std::size_t maxn = q == 2 ? 14 : 9;
        auto all = nsk::enumerate_irreducibles(PrimeField(q), maxn);
        for (std::size_t n = 1; n <= maxn; ++n) {
            std::size_t cnt = 0;
            for (const auto& f : all) cnt += (std::size_t)f.degree() == n;
            CHECK(nsk::count_irreducibles(q, n) == BigUint((unsigned long)cnt));
        }
    }
}

TEST_CASE("mobius") {
    CHECK(nsk::mobius(1) == 1);
    CHECK(nsk::mobius(2) == -1);
    CHECK(nsk::mobius(4) == 0);
    CHECK(nsk::mobius(6) == 1);
    CHECK(nsk::mobius(30) == -1);
}

TEST_CASE("factorization basics") {
    PrimeField F2(2);
    auto fs = nsk::factor(poly(F2, {0, 1, 1})); // x^2 + x
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first == Polynomial::x(F2));
    CHECK(fs[0].second == 1);
    CHECK(fs[1].first == poly(F2, {1, 1}));
    CHECK(fs[1].second == 1);
    CHECK_THROWS_AS(nsk::factor(Polynomial::one(F2)), nsk::ConstantPolynomial);
}

TEST_CASE("factorization of a published degree-34 value") {
    PrimeField F2(2);
    Polynomial c = from_exps(
        F2, {2, 3, 6, 10, 15, 16, 17, 18, 20, 21, 23, 26, 27, 30, 31, 33, 34});
    auto fs = nsk::factor(c);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].first == Polynomial::x(F2));
    CHECK(fs[0].second == 2);
    CHECK(fs[1].first == from_exps(F2, {0, 3, 4})); // x^4 + x^3 + 1
    CHECK(fs[1].second == 1);
    CHECK(fs[2].first.degree() == 28);
    CHECK(fs[2].second == 1);
    CHECK(nsk::is_irreducible(fs[2].first));
}

TEST_CASE("factor round-trips random polynomials") {
    std::mt19937_64 rng(5);
    for (std::uint64_t q : {2ull, 3ull, 5ull}) {
        PrimeField F(q);
        for (int i = 0; i < 40; ++i) {
            std::vector<std::uint64_t> c(rng() % 24 + 2);
            for (auto& v : c) v = rng() % q;
            Polynomial f(F, c);
            if (f.degree() < 1) continue;
            auto fs = nsk::factor(f);
            Polynomial prod = Polynomial::constant(F, f.leading_coeff());
            for (const auto& [g, e] : fs) {
                CHECK(g.is_monic());
                CHECK(nsk::is_irreducible(g));
                for (unsigned k = 0; k < e; ++k) prod = prod * g;
            }
            CHECK(prod == f);
            // single factor with multiplicity 1 <=> irreducible (up to scalar)
            bool single = fs.size() == 1 && fs[0].second == 1;
            CHECK(single == nsk::is_irreducible(f));
        }
    }
}

TEST_CASE("text form round trip") {
    PrimeField F2(2);
    Polynomial h = from_exps(F2, {0, 2, 35});
    std::string text = h.to_text();
    CHECK(Polynomial::from_text(F2, text) == h);
    CHECK(text.substr(0, 6) == "1,0,1,");
    CHECK(Polynomial::zero(F2).to_text() == "0");
    CHECK(Polynomial::from_text(F2, "0") == Polynomial::zero(F2));
    CHECK_THROWS_AS(Polynomial::from_text(F2, "1,2"), nsk::ParseError); // out of range
}

TEST_CASE("poly_powmod equals naive powering") {
    std::mt19937_64 rng(6);
    for (std::uint64_t q : {2ull, 5ull}) {
        PrimeField F(q);
        Polynomial m = nsk::random_irreducible(F, 7, rng);
        for (int i = 0; i < 20; ++i) {
            std::vector<std::uint64_t> c(5);
            for (auto& v : c) v = rng() % q;
            Polynomial b(F, c);
            std::uint64_t e = rng() % 64;
            Polynomial expected = Polynomial::one(F);
            for (std::uint64_t k = 0; k < e; ++k) expected = (expected * b) % m;
            CHECK(nsk::poly_powmod(b, BigUint(e), m) == expected);
        }
    }
}

TEST_CASE("eval") {
    PrimeField F5(5);
    Polynomial f = poly(F5, {1, 2, 3}); // 1 + 2x + 3x^2
    CHECK(f.eval(0) == 1);
    CHECK(f.eval(2) == (1 + 4 + 12) % 5);
}
