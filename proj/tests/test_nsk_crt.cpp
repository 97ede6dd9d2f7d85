#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsk/nsk_crt.hpp"

using namespace nsk;

TEST_CASE("lagrange interpolation inverts evaluation") {
    for (std::uint64_t q : {5ull, 7ull}) {
        PrimeField F(q);
        // exhaustive over all polynomials of degree <= 2 at 3 fixed points
        std::vector<std::uint64_t> pts = {0, 1, 2};
        for (std::uint64_t c0 = 0; c0 < q; ++c0)
            for (std::uint64_t c1 = 0; c1 < q; ++c1)
                for (std::uint64_t c2 = 0; c2 < q; ++c2) {
                    Polynomial f(F, {c0, c1, c2});
                    std::vector<std::uint64_t> vals;
                    for (auto r : pts) vals.push_back(f.eval(r));
                    CHECK(lagrange_interpolate(F, pts, vals) == f);
                }
    }
    CHECK_THROWS_AS(lagrange_interpolate(PrimeField(5), {0, 1}, {1}), LengthMismatch);
}

TEST_CASE("keygen feasibility bounds") {
    CHECK_NOTHROW(keygen_crt(5, 1, 1));
    CHECK_NOTHROW(keygen_crt(3, 1, 1)); // 2 points + 1 alpha = 3 elements
    CHECK_THROWS_AS(keygen_crt(2, 1, 1), FieldTooSmall);
    CHECK_THROWS_AS(keygen_crt(5, 3, 1), FieldTooSmall);
}

TEST_CASE("generated keys are well-formed") {
    auto [pk, sk] = keygen_crt(101, 10, 7);
    CHECK(pk.eval_points.size() == 11);
    CHECK(pk.carriers.size() == 10);
    for (const auto& c : pk.carriers) {
        CHECK(c.size() == 11);
        for (auto x : c) CHECK(x != 0);
    }
    CHECK(BigUint(sk.v) * BigUint(sk.u) % BigUint(100) == BigUint(1));
    // carriers really are (r_j - alpha_i)^v
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 11; ++j)
            CHECK(pk.carriers[i][j] ==
                  pk.field.pow(pk.field.sub(pk.eval_points[j], sk.alphas[i]), sk.v));
}

TEST_CASE("hand-worked two-point example over F_5") {
    PrimeField F5(5);
    CrtPublicKey pk{F5, {0, 1}, {{3, 4}}}; // (0-2)^1, (1-2)^1
    CrtSecretKey sk{F5, {0, 1}, {2}, 1, 1};
    Message m = Message::from_string("1");
    auto c = encrypt_crt(pk, m);
    CHECK(c == std::vector<std::uint64_t>{3, 4});
    // interpolant through (0,3),(1,4) is x+3 = x-2, root at alpha=2
    CHECK(decrypt_crt(sk, c) == m);
    CHECK(encrypt_crt(pk, Message::from_string("0")) == std::vector<std::uint64_t>{1, 1});
    CHECK(decrypt_crt(sk, {1, 1}).to_string() == "0");
}

TEST_CASE("round trip across random keys") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
        auto [pk, sk] = keygen_crt(101, 10, rng());
        for (int t = 0; t < 5; ++t) {
            std::vector<std::uint8_t> bits(10);
            for (auto& b : bits) b = rng() & 1;
            Message m{bits};
            CHECK(decrypt_crt(sk, encrypt_crt(pk, m)) == m);
        }
    }
}

TEST_CASE("interpolant degree equals the message weight") {
    auto [pk, sk] = keygen_crt(101, 10, 3);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::uint8_t> bits(10);
        for (auto& b : bits) b = rng() & 1;
        Message m{bits};
        auto c = encrypt_crt(pk, m);
        std::vector<std::uint64_t> vals(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) vals[j] = pk.field.pow(c[j], sk.u);
        Polynomial k = lagrange_interpolate(pk.field, pk.eval_points, vals);
        CHECK(k.degree() == (long)m.weight());
    }
}

TEST_CASE("forged vectors are rejected") {
    auto [pk, sk] = keygen_crt(101, 10, 21);
    std::mt19937_64 rng(22);
    int rejected = 0;
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint64_t> c(11);
        for (auto& x : c) x = rng() % 100 + 1;
        try {
            decrypt_crt(sk, c);
        } catch (const InvalidCiphertext&) {
            ++rejected;
        }
    }
    CHECK(rejected >= 49);
    CHECK_THROWS_AS(decrypt_crt(sk, std::vector<std::uint64_t>(11, 0)), ZeroCiphertext);
    CHECK_THROWS_AS(decrypt_crt(sk, std::vector<std::uint64_t>{1, 1}), LengthMismatch);
}
