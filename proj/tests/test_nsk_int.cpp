#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsk/nsk_int.hpp"

using namespace nsk;

TEST_CASE("keygen picks the first primes and the next prime above their product") {
    auto [pk3, sk3] = keygen_int(3, BigUint(0), 1);
    CHECK(sk3.primes == std::vector<BigUint>{BigUint(2), BigUint(3), BigUint(5)});
    CHECK(pk3.p == BigUint(31));

    auto [pk1, sk1] = keygen_int(1, BigUint(0), 1);
    CHECK(sk1.primes == std::vector<BigUint>{BigUint(2)});
    CHECK(pk1.p == BigUint(3));

    auto [pk6, sk6] = keygen_int(6, BigUint(0), 1);
    CHECK(pk6.p == BigUint(30047));

    // product stays below the modulus
    BigUint prod(1);
    for (const auto& q : sk6.primes) prod = prod * q;
    CHECK(prod < pk6.p);
    CHECK((sk6.v * sk6.u) % (pk6.p - BigUint(1)) == BigUint(1));
}

TEST_CASE("margin pushes the modulus away from the product") {
    auto [pk, sk] = keygen_int(6, BigUint(1000000), 1);
    BigUint prod(1);
    for (const auto& q : sk.primes) prod = prod * q;
    CHECK(pk.p > prod + BigUint(1000000));
}

TEST_CASE("hand-built key matches the worked small numbers") {
    // p=31, primes {2,3,5}, v=7, u=13 (7*13 = 91 = 1 mod 30)
    IntSecretKey sk{BigUint(31), {BigUint(2), BigUint(3), BigUint(5)}, BigUint(7), BigUint(13)};
    IntPublicKey pk{BigUint(31),
                    {mod_pow(BigUint(2), sk.v, sk.p), mod_pow(BigUint(3), sk.v, sk.p),
                     mod_pow(BigUint(5), sk.v, sk.p)}};
    Message m = Message::from_string("101");
    BigUint c = encrypt_int(pk, m);
    CHECK(c == BigUint(20)); // 10^7 mod 31
    CHECK(mod_pow(c, sk.u, sk.p) == BigUint(10));
    CHECK(decrypt_int(sk, c) == m);
    CHECK(encrypt_int(pk, Message::from_string("000")) == BigUint(1));
    CHECK(decrypt_int(sk, BigUint(1)).to_string() == "000");
    CHECK_THROWS_AS(encrypt_int(pk, Message::from_string("10")), LengthMismatch);
    // 16 = 2^14 mod 31, so 16^u = 4: divisible by 2 but 2 != 4
    CHECK_THROWS_AS(decrypt_int(sk, BigUint(16)), InvalidCiphertext);
}

TEST_CASE("round trip at L=16 and L=32") {
    std::mt19937_64 rng(5);
    for (std::size_t L : {16, 32}) {
        auto [pk, sk] = keygen_int(L, BigUint(0), rng());
        for (int t = 0; t < 100; ++t) {
            std::vector<std::uint8_t> bits(L);
            for (auto& b : bits) b = rng() & 1;
            Message m{bits};
            CHECK(decrypt_int(sk, encrypt_int(pk, m)) == m);
        }
    }
}

TEST_CASE("custom prime list") {
    auto [pk, sk] = keygen_int_with_primes({BigUint(11), BigUint(13), BigUint(17)},
                                           BigUint(0), 3);
    CHECK(pk.p == next_prime(BigUint(11 * 13 * 17)));
    Message m = Message::from_string("110");
    CHECK(decrypt_int(sk, encrypt_int(pk, m)) == m);
}

TEST_CASE("decrypted value is smooth over the carrier set") {
    auto [pk, sk] = keygen_int(10, BigUint(0), 9);
    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::uint8_t> bits(10);
        for (auto& b : bits) b = rng() & 1;
        BigUint tval = mod_pow(encrypt_int(pk, Message{bits}), sk.u, sk.p);
        for (const auto& q : sk.primes)
            while ((tval % q).is_zero()) tval = tval / q;
        CHECK(tval == BigUint(1));
    }
}
